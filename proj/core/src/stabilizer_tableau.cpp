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

#include "hashrep/stabilizer_tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "hashrep/rng.hpp"
#include "row_phase.hpp"

namespace hashrep {

namespace {
constexpr size_t kNoRow = static_cast<size_t>(-1);
}

StabilizerTableau::StabilizerTableau(size_t n)
    : n_(n),
      words_((n + 63) / 64),
      x_(2 * n * ((n + 63) / 64), 0),
      z_(2 * n * ((n + 63) / 64), 0),
      sign_(2 * n, 0) {
  if (n == 0) throw std::invalid_argument("StabilizerTableau: need at least one qubit");
}

StabilizerTableau StabilizerTableau::computational_zero(size_t n) {
  StabilizerTableau t(n);
  for (size_t q = 0; q < n; ++q) {
    t.set_x(q, q, true);       // destabilizer X_q
    t.set_z(n + q, q, true);   // stabilizer Z_q
  }
  return t;
}

StabilizerTableau StabilizerTableau::bell_pairs(size_t pairs) {
  StabilizerTableau t = computational_zero(2 * pairs);
  for (size_t i = 0; i < pairs; ++i) {
    t.apply_h(2 * i);
    t.apply_cnot(2 * i, 2 * i + 1);
  }
  return t;
}

void StabilizerTableau::set_x(size_t row, size_t q, bool v) {
  const uint64_t mask = uint64_t{1} << (q & 63);
  if (v) {
    x_[row * words_ + (q >> 6)] |= mask;
  } else {
    x_[row * words_ + (q >> 6)] &= ~mask;
  }
}

void StabilizerTableau::set_z(size_t row, size_t q, bool v) {
  const uint64_t mask = uint64_t{1} << (q & 63);
  if (v) {
    z_[row * words_ + (q >> 6)] |= mask;
  } else {
    z_[row * words_ + (q >> 6)] &= ~mask;
  }
}

void StabilizerTableau::rowsum(size_t target, size_t source) {
  internal::multiply_row_into(
      std::span<const uint64_t>(&x_[source * words_], words_),
      std::span<const uint64_t>(&z_[source * words_], words_), sign_[source],
      std::span<uint64_t>(&x_[target * words_], words_),
      std::span<uint64_t>(&z_[target * words_], words_), sign_[target]);
}

void StabilizerTableau::apply_h(size_t q) {
  for (size_t r = 0; r < 2 * n_; ++r) {
    const bool x = get_x(r, q), z = get_z(r, q);
    sign_[r] ^= static_cast<uint8_t>(x && z);
    set_x(r, q, z);
    set_z(r, q, x);
  }
}

void StabilizerTableau::apply_s(size_t q) {
  for (size_t r = 0; r < 2 * n_; ++r) {
    const bool x = get_x(r, q), z = get_z(r, q);
    sign_[r] ^= static_cast<uint8_t>(x && z);
    set_z(r, q, x != z);
  }
}

void StabilizerTableau::apply_sdg(size_t q) {
  for (size_t r = 0; r < 2 * n_; ++r) {
    const bool x = get_x(r, q), z = get_z(r, q);
    const bool nz = x != z;
    set_z(r, q, nz);
    sign_[r] ^= static_cast<uint8_t>(x && nz);
  }
}

void StabilizerTableau::apply_x(size_t q) {
  for (size_t r = 0; r < 2 * n_; ++r) sign_[r] ^= static_cast<uint8_t>(get_z(r, q));
}

void StabilizerTableau::apply_z(size_t q) {
  for (size_t r = 0; r < 2 * n_; ++r) sign_[r] ^= static_cast<uint8_t>(get_x(r, q));
}

void StabilizerTableau::apply_y(size_t q) {
  for (size_t r = 0; r < 2 * n_; ++r) {
    sign_[r] ^= static_cast<uint8_t>(get_x(r, q) != get_z(r, q));
  }
}

void StabilizerTableau::apply_cnot(size_t control, size_t target) {
  if (control == target) throw std::invalid_argument("apply_cnot: equal qubits");
  for (size_t r = 0; r < 2 * n_; ++r) {
    const bool xc = get_x(r, control), zc = get_z(r, control);
    const bool xt = get_x(r, target), zt = get_z(r, target);
    sign_[r] ^= static_cast<uint8_t>(xc && zt && (xt == zc));
    set_x(r, target, xt != xc);
    set_z(r, control, zc != zt);
  }
}

void StabilizerTableau::apply_cz(size_t a, size_t b) {
  apply_h(b);
  apply_cnot(a, b);
  apply_h(b);
}

StabilizerTableau::MeasureResult StabilizerTableau::measure_z(size_t q,
                                                              std::optional<int> forced,
                                                              Rng* rng) {
  size_t p = kNoRow;
  for (size_t r = n_; r < 2 * n_; ++r) {
    if (get_x(r, q)) {
      p = r;
      break;
    }
  }
  if (p != kNoRow) {
    // Random outcome: anticommuting stabilizer found.
    for (size_t r = 0; r < 2 * n_; ++r) {
      if (r != p && get_x(r, q)) rowsum(r, p);
    }
    // The old stabilizer becomes the destabilizer partner.
    std::copy_n(&x_[p * words_], words_, &x_[(p - n_) * words_]);
    std::copy_n(&z_[p * words_], words_, &z_[(p - n_) * words_]);
    sign_[p - n_] = sign_[p];
    std::fill_n(&x_[p * words_], words_, 0);
    std::fill_n(&z_[p * words_], words_, 0);
    set_z(p, q, true);
    int outcome;
    if (forced.has_value()) {
      outcome = *forced;
    } else {
      if (rng == nullptr) throw std::invalid_argument("measure: random outcome needs an rng");
      outcome = rng->next_bit() ? 1 : 0;
    }
    sign_[p] = static_cast<uint8_t>(outcome);
    return {outcome, false};
  }

  // Deterministic: the product of stabilizers selected by destabilizer X
  // bits at q equals +-Z_q; its sign is the outcome.
  std::vector<uint64_t> sx(words_, 0), sz(words_, 0);
  uint8_t ssign = 0;
  for (size_t i = 0; i < n_; ++i) {
    if (get_x(i, q)) {
      internal::multiply_row_into(
          std::span<const uint64_t>(&x_[(n_ + i) * words_], words_),
          std::span<const uint64_t>(&z_[(n_ + i) * words_], words_), sign_[n_ + i],
          std::span<uint64_t>(sx), std::span<uint64_t>(sz), ssign);
    }
  }
  return {ssign, true};
}

StabilizerTableau::MeasureResult StabilizerTableau::measure(size_t qubit, MeasureBasis basis,
                                                            std::optional<int> forced_outcome,
                                                            Rng* rng) {
  if (qubit >= n_) throw std::invalid_argument("measure: qubit out of range");
  switch (basis) {
    case MeasureBasis::kZ:
      return measure_z(qubit, forced_outcome, rng);
    case MeasureBasis::kX: {
      apply_h(qubit);
      const auto res = measure_z(qubit, forced_outcome, rng);
      apply_h(qubit);
      return res;
    }
    case MeasureBasis::kY: {
      apply_sdg(qubit);
      apply_h(qubit);
      const auto res = measure_z(qubit, forced_outcome, rng);
      apply_h(qubit);
      apply_s(qubit);
      return res;
    }
  }
  throw std::logic_error("measure: bad basis");
}

std::pair<int, int> StabilizerTableau::bell_measure(size_t a, size_t b,
                                                    std::optional<std::pair<int, int>> forced,
                                                    Rng* rng) {
  if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("bell_measure: bad qubits");
  apply_cnot(a, b);
  apply_h(a);
  const std::optional<int> fk = forced ? std::optional<int>(forced->first) : std::nullopt;
  const std::optional<int> fl = forced ? std::optional<int>(forced->second) : std::nullopt;
  const auto mk = measure_z(a, fk, rng);
  if (forced && mk.deterministic && mk.outcome != forced->first) {
    throw std::logic_error("bell_measure: cannot force a deterministic phase bit");
  }
  const auto ml = measure_z(b, fl, rng);
  if (forced && ml.deterministic && ml.outcome != forced->second) {
    throw std::logic_error("bell_measure: cannot force a deterministic amplitude bit");
  }
  return {mk.outcome, ml.outcome};
}

void StabilizerTableau::remove_zeroed_qubit(size_t q) {
  if (q >= n_) throw std::invalid_argument("remove_zeroed_qubit: qubit out of range");
  if (n_ == 1) throw std::invalid_argument("remove_zeroed_qubit: cannot empty the tableau");
  for (size_t r = n_; r < 2 * n_; ++r) {
    if (get_x(r, q)) {
      throw std::logic_error("remove_zeroed_qubit: qubit not in a Z eigenstate");
    }
  }
  // Destabilizer X bits at q select the stabilizer subset multiplying to
  // +-Z_q; fold that subset into one pivot row, preserving the symplectic
  // pairing by the transposed destabilizer updates.
  std::vector<size_t> sel;
  for (size_t i = 0; i < n_; ++i) {
    if (get_x(i, q)) sel.push_back(i);
  }
  if (sel.empty()) throw std::logic_error("remove_zeroed_qubit: no destabilizer touches qubit");
  const size_t i0 = sel[0];
  for (size_t idx = 1; idx < sel.size(); ++idx) {
    rowsum(n_ + i0, n_ + sel[idx]);
    rowsum(sel[idx], i0);
  }
  // Pivot must now be exactly +Z_q.
  for (size_t qq = 0; qq < n_; ++qq) {
    if (get_x(n_ + i0, qq) || (get_z(n_ + i0, qq) && qq != q)) {
      throw std::logic_error("remove_zeroed_qubit: pivot is not a pure Z on the qubit");
    }
  }
  if (!get_z(n_ + i0, q)) throw std::logic_error("remove_zeroed_qubit: qubit not determined");
  if (sign_[n_ + i0]) {
    throw std::logic_error("remove_zeroed_qubit: qubit is |1>, flip it before removal");
  }
  for (size_t r = n_; r < 2 * n_; ++r) {
    if (r != n_ + i0 && get_z(r, q)) {
      rowsum(r, n_ + i0);
      rowsum(i0, r - n_);
    }
  }
  for (size_t i = 0; i < n_; ++i) {
    if (i != i0 && get_z(i, q)) rowsum(i, n_ + i0);
  }

  // Drop the pivot row pair and the qubit column.
  StabilizerTableau out(n_ - 1);
  std::fill(out.x_.begin(), out.x_.end(), 0);
  std::fill(out.z_.begin(), out.z_.end(), 0);
  size_t new_row = 0;
  const auto copy_row = [&](size_t old_row, size_t dest_row) {
    size_t nq = 0;
    for (size_t qq = 0; qq < n_; ++qq) {
      if (qq == q) continue;
      out.set_x(dest_row, nq, get_x(old_row, qq));
      out.set_z(dest_row, nq, get_z(old_row, qq));
      ++nq;
    }
    out.sign_[dest_row] = sign_[old_row];
  };
  for (size_t i = 0; i < n_; ++i) {
    if (i == i0) continue;
    copy_row(i, new_row);
    copy_row(n_ + i, (n_ - 1) + new_row);
    ++new_row;
  }
  *this = std::move(out);
}

StabilizerTableau StabilizerTableau::tensor_with(const StabilizerTableau& other) const {
  StabilizerTableau out(n_ + other.n_);
  std::fill(out.x_.begin(), out.x_.end(), 0);
  std::fill(out.z_.begin(), out.z_.end(), 0);
  const size_t m = out.n_;
  for (size_t i = 0; i < n_; ++i) {
    for (size_t q = 0; q < n_; ++q) {
      out.set_x(i, q, get_x(i, q));
      out.set_z(i, q, get_z(i, q));
      out.set_x(m + i, q, get_x(n_ + i, q));
      out.set_z(m + i, q, get_z(n_ + i, q));
    }
    out.sign_[i] = sign_[i];
    out.sign_[m + i] = sign_[n_ + i];
  }
  for (size_t i = 0; i < other.n_; ++i) {
    for (size_t q = 0; q < other.n_; ++q) {
      out.set_x(n_ + i, n_ + q, other.get_x(i, q));
      out.set_z(n_ + i, n_ + q, other.get_z(i, q));
      out.set_x(m + n_ + i, n_ + q, other.get_x(other.n_ + i, q));
      out.set_z(m + n_ + i, n_ + q, other.get_z(other.n_ + i, q));
    }
    out.sign_[n_ + i] = other.sign_[i];
    out.sign_[m + n_ + i] = other.sign_[other.n_ + i];
  }
  return out;
}

namespace {

struct CanonicalRows {
  size_t n, words;
  std::vector<uint64_t> x, z;
  std::vector<uint8_t> sign;

  bool get(const std::vector<uint64_t>& m, size_t r, size_t q) const {
    return (m[r * words + (q >> 6)] >> (q & 63)) & 1;
  }
  void mul_into(size_t target, size_t source) {
    internal::multiply_row_into(
        std::span<const uint64_t>(&x[source * words], words),
        std::span<const uint64_t>(&z[source * words], words), sign[source],
        std::span<uint64_t>(&x[target * words], words),
        std::span<uint64_t>(&z[target * words], words), sign[target]);
  }
  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t w = 0; w < words; ++w) {
      std::swap(x[a * words + w], x[b * words + w]);
      std::swap(z[a * words + w], z[b * words + w]);
    }
    std::swap(sign[a], sign[b]);
  }
};

CanonicalRows canonical_stabilizers(const StabilizerTableau& t) {
  const size_t n = t.num_qubits();
  CanonicalRows rows{n, (n + 63) / 64, {}, {}, {}};
  rows.x.assign(n * rows.words, 0);
  rows.z.assign(n * rows.words, 0);
  rows.sign.assign(n, 0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t q = 0; q < n; ++q) {
      if (t.stab_x(r, q)) rows.x[r * rows.words + (q >> 6)] |= uint64_t{1} << (q & 63);
      if (t.stab_z(r, q)) rows.z[r * rows.words + (q >> 6)] |= uint64_t{1} << (q & 63);
    }
    rows.sign[r] = t.stab_sign(r) ? 1 : 0;
  }
  // RREF with column order (x_0..x_{n-1}, z_0..z_{n-1}); unique for a fixed
  // ordering, so equal groups produce identical rows and signs.
  size_t next = 0;
  for (size_t col = 0; col < 2 * n && next < n; ++col) {
    const bool is_x = col < n;
    const size_t q = is_x ? col : col - n;
    size_t pivot = kNoRow;
    for (size_t r = next; r < n; ++r) {
      const bool bit = is_x ? rows.get(rows.x, r, q) : rows.get(rows.z, r, q);
      if (bit) {
        pivot = r;
        break;
      }
    }
    if (pivot == kNoRow) continue;
    rows.swap_rows(pivot, next);
    for (size_t r = 0; r < n; ++r) {
      if (r == next) continue;
      const bool bit = is_x ? rows.get(rows.x, r, q) : rows.get(rows.z, r, q);
      if (bit) rows.mul_into(r, next);
    }
    ++next;
  }
  return rows;
}

}  // namespace

bool StabilizerTableau::same_state(const StabilizerTableau& other) const {
  if (n_ != other.n_) return false;
  const CanonicalRows a = canonical_stabilizers(*this);
  const CanonicalRows b = canonical_stabilizers(other);
  return a.x == b.x && a.z == b.z && a.sign == b.sign;
}

bool StabilizerTableau::is_valid() const {
  const auto anticommute = [&](size_t r1, size_t r2) {
    int acc = 0;
    for (size_t q = 0; q < n_; ++q) {
      acc ^= (get_x(r1, q) && get_z(r2, q)) ^ (get_z(r1, q) && get_x(r2, q));
    }
    return acc != 0;
  };
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = i; j < n_; ++j) {
      if (anticommute(n_ + i, n_ + j)) return false;          // stabilizers commute
      if (anticommute(i, j)) return false;                    // destabilizers commute
      const bool want = i == j;
      if (anticommute(i, n_ + j) != want) return false;       // pairing
    }
  }
  // Stabilizer rank must be n.
  CanonicalRows rows = canonical_stabilizers(*this);
  size_t rank = 0;
  for (size_t r = 0; r < n_; ++r) {
    bool nonzero = false;
    for (size_t w = 0; w < rows.words; ++w) {
      nonzero |= rows.x[r * rows.words + w] != 0 || rows.z[r * rows.words + w] != 0;
    }
    if (nonzero) ++rank;
  }
  return rank == n_;
}

}  // namespace hashrep
