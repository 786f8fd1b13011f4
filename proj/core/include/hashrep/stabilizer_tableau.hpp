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

#ifndef HASHREP_STABILIZER_TABLEAU_H
#define HASHREP_STABILIZER_TABLEAU_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hashrep {

class Rng;

enum class MeasureBasis { kX, kY, kZ };

/// Binary symplectic tableau of an n-qubit stabilizer state with both
/// stabilizer and destabilizer generators, GF(2) rows bit-packed into 64-bit
/// words. Mutable value type; one execution context owns a tableau at a time.
class StabilizerTableau {
 public:
  /// |0...0> on n qubits.
  static StabilizerTableau computational_zero(size_t n);
  /// `pairs` Bell pairs |phi+> on qubit pairs (2i, 2i+1).
  static StabilizerTableau bell_pairs(size_t pairs);

  size_t num_qubits() const { return n_; }

  void apply_h(size_t q);
  void apply_s(size_t q);
  void apply_sdg(size_t q);
  void apply_x(size_t q);
  void apply_y(size_t q);
  void apply_z(size_t q);
  void apply_cnot(size_t control, size_t target);
  void apply_cz(size_t a, size_t b);

  struct MeasureResult {
    int outcome = 0;  // 0 -> +1 eigenvalue, 1 -> -1
    bool deterministic = false;
  };

  /// Standard tableau measurement. When the outcome is random,
  /// `forced_outcome` selects the branch (otherwise the rng draws it); when
  /// deterministic, forcing is ignored and the actual outcome returned.
  MeasureResult measure(size_t qubit, MeasureBasis basis,
                        std::optional<int> forced_outcome, Rng* rng);

  /// Bell measurement of (a, b) in the basis |B_kl> = (id (x) X^l Z^k)|phi+>;
  /// returns the (k, l) outcome bits. Both qubits are left measured out in
  /// the computational basis (remove them afterwards). Throws when a forced
  /// branch collides with a deterministic outcome.
  std::pair<int, int> bell_measure(size_t a, size_t b,
                                   std::optional<std::pair<int, int>> forced,
                                   Rng* rng);

  /// Deletes qubit q from the tableau. The state must factor as |0>_q (x)
  /// rest, i.e. q was Z-measured with outcome +1 (or flipped to it).
  void remove_zeroed_qubit(size_t q);

  /// Tensor product; `other`'s qubits are appended after this tableau's.
  StabilizerTableau tensor_with(const StabilizerTableau& other) const;

  /// True when both tableaus describe the same state (identical stabilizer
  /// groups including signs, via canonical row reduction).
  bool same_state(const StabilizerTableau& other) const;

  /// Full symplectic consistency check: stabilizers commute and have rank n,
  /// destabilizers pair correctly. Intended for tests.
  bool is_valid() const;

  // Stabilizer-row bit access for graph-state extraction (row in [0, n)).
  bool stab_x(size_t row, size_t q) const { return get_x(n_ + row, q); }
  bool stab_z(size_t row, size_t q) const { return get_z(n_ + row, q); }
  bool stab_sign(size_t row) const { return sign_[n_ + row] != 0; }

 private:
  StabilizerTableau(size_t n);

  bool get_x(size_t row, size_t q) const { return (x_[row * words_ + (q >> 6)] >> (q & 63)) & 1; }
  bool get_z(size_t row, size_t q) const { return (z_[row * words_ + (q >> 6)] >> (q & 63)) & 1; }
  void set_x(size_t row, size_t q, bool v);
  void set_z(size_t row, size_t q, bool v);

  /// row_target *= row_source, with the i-power phase bookkeeping.
  void rowsum(size_t target, size_t source);
  MeasureResult measure_z(size_t q, std::optional<int> forced, Rng* rng);

  size_t n_ = 0;
  size_t words_ = 0;
  // Rows [0, n) are destabilizers, [n, 2n) stabilizers.
  std::vector<uint64_t> x_, z_;
  std::vector<uint8_t> sign_;
};

}  // namespace hashrep

#endif
