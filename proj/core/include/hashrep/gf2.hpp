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

#ifndef HASHREP_GF2_H
#define HASHREP_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hashrep {

/// Bit-packed GF(2) vector.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& other);

  /// Parity of the AND with `other` (the GF(2) inner product).
  bool dot(const BitVec& other) const;

  bool any() const;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  bool operator==(const BitVec&) const = default;

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

/// Row-reduced GF(2) linear system M x = rhs. Used by the hashing decoder to
/// walk the affine solution space of the recorded parity constraints.
class Gf2System {
 public:
  Gf2System(std::vector<BitVec> rows, std::vector<uint8_t> rhs);

  size_t rank() const { return pivot_cols_.size(); }
  const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }
  const std::vector<size_t>& free_cols() const { return free_cols_; }

  /// Basis of the homogeneous nullspace; one vector per free column.
  std::vector<BitVec> nullspace_basis() const;

  /// Unique solution whose free-column bits equal `free_bits` (indexed in
  /// free_cols() order).
  BitVec solve_with_free_bits(const BitVec& free_bits) const;

  /// False when the recorded rhs is inconsistent (cannot happen for parities
  /// recorded from an actual string; kept as an integrity check).
  bool consistent() const { return consistent_; }

 private:
  size_t cols_ = 0;
  std::vector<BitVec> rows_;      // reduced rows, one per pivot
  std::vector<uint8_t> rhs_;      // reduced rhs, aligned with rows_
  std::vector<size_t> pivot_cols_;
  std::vector<size_t> free_cols_;
  bool consistent_ = true;
};

}  // namespace hashrep

#endif
