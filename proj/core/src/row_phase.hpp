// Copyright 2026 Hashrep Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HASHREP_SRC_ROW_PHASE_H
#define HASHREP_SRC_ROW_PHASE_H

#include <bit>
#include <cstdint>
#include <span>

namespace hashrep::internal {

/// Word-parallel sum of the i-power contributions when multiplying the Pauli
/// row (xs, zs) into (xt, zt), i.e. the exponent of i in
/// prod_j sigma(xs_j, zs_j) * sigma(xt_j, zt_j). Hermitian Pauli convention:
/// (1,1) is Y.
inline int phase_exponent(std::span<const uint64_t> xs, std::span<const uint64_t> zs,
                          std::span<const uint64_t> xt, std::span<const uint64_t> zt) {
  int total = 0;
  for (size_t w = 0; w < xs.size(); ++w) {
    const uint64_t a = xs[w], b = zs[w], c = xt[w], d = zt[w];
    const uint64_t plus = (a & b & d & ~c) | (a & ~b & c & d) | (~a & b & c & ~d);
    const uint64_t minus = (a & b & c & ~d) | (a & ~b & d & ~c) | (~a & b & c & d);
    total += std::popcount(plus) - std::popcount(minus);
  }
  return total;
}

/// Multiplies row (xs, zs, sign_s) into (xt, zt, sign_t) in place. Signs are
/// 0/1 for +/-; a residual odd i-power (possible only for products that
/// anticommute, e.g. scratch destabilizer updates) truncates to the sign bit.
inline void multiply_row_into(std::span<const uint64_t> xs, std::span<const uint64_t> zs,
                              uint8_t sign_s, std::span<uint64_t> xt,
                              std::span<uint64_t> zt, uint8_t& sign_t) {
  int total = 2 * sign_t + 2 * sign_s + phase_exponent(xs, zs, xt, zt);
  total %= 4;
  if (total < 0) total += 4;
  sign_t = static_cast<uint8_t>((total >> 1) & 1);
  for (size_t w = 0; w < xt.size(); ++w) {
    xt[w] ^= xs[w];
    zt[w] ^= zs[w];
  }
}

}  // namespace hashrep::internal

#endif
