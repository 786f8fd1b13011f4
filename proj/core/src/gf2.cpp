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

#include "hashrep/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hashrep {

void BitVec::xor_with(const BitVec& other) {
  if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
  for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::dot(const BitVec& other) const {
  if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec::dot: size mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

bool BitVec::any() const {
  for (uint64_t w : words_) {
    if (w) return true;
  }
  return false;
}

Gf2System::Gf2System(std::vector<BitVec> rows, std::vector<uint8_t> rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("Gf2System: row/rhs mismatch");
  if (rows.empty()) throw std::invalid_argument("Gf2System: empty system");
  cols_ = rows[0].size();

  // Forward elimination with back-substitution folded in (full RREF).
  std::vector<uint8_t> used(rows.size(), 0);
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = rows.size();
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && rows[r].get(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot && rows[r].get(col)) {
        rows[r].xor_with(rows[pivot]);
        rhs[r] ^= rhs[pivot];
      }
    }
    pivot_cols_.push_back(col);
    rows_.push_back(rows[pivot]);
    rhs_.push_back(rhs[pivot]);
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!used[r] && rhs[r]) consistent_ = false;  // 0 = 1 row
  }

  std::vector<uint8_t> is_pivot(cols_, 0);
  for (size_t c : pivot_cols_) is_pivot[c] = 1;
  for (size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) free_cols_.push_back(c);
  }
}

std::vector<BitVec> Gf2System::nullspace_basis() const {
  std::vector<BitVec> basis;
  basis.reserve(free_cols_.size());
  for (size_t f : free_cols_) {
    BitVec v(cols_);
    v.set(f, true);
    // Pivot bits are read off the reduced rows: row r has a single pivot and
    // possibly free-column entries, so x_pivot = sum of its free bits.
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].get(f)) v.set(pivot_cols_[r], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVec Gf2System::solve_with_free_bits(const BitVec& free_bits) const {
  if (free_bits.size() != free_cols_.size()) {
    throw std::invalid_argument("Gf2System::solve_with_free_bits: size mismatch");
  }
  BitVec x(cols_);
  for (size_t i = 0; i < free_cols_.size(); ++i) x.set(free_cols_[i], free_bits.get(i));
  for (size_t r = 0; r < rows_.size(); ++r) {
    // Pivot bit = rhs + contribution of the row's free-column entries.
    bool v = rhs_[r];
    for (size_t i = 0; i < free_cols_.size(); ++i) {
      if (free_bits.get(i) && rows_[r].get(free_cols_[i])) v = !v;
    }
    x.set(pivot_cols_[r], v);
  }
  return x;
}

}  // namespace hashrep
