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

#ifndef HASHREP_BELL_STATE_H
#define HASHREP_BELL_STATE_H

#include <array>

namespace hashrep {

class BellDiagonal;

/// Reliability parameter of single-qubit depolarizing noise.
/// p_ldn = 1 is noiseless, p_ldn = 0 is complete depolarization.
struct NoiseParams {
  double p_ldn = 1.0;

  /// Builds from an error rate ("1% local noise" -> p_ldn = 0.99).
  static NoiseParams from_error_rate(double rate);
};

/// Werner state, parameterized by its fidelity F with the (0,0) Bell state.
/// The three error components are equal, each (1-F)/3.
struct WernerParams {
  double fidelity = 1.0;

  /// Werner weight q = (4F - 1)/3, in [-1/3, 1].
  double weight() const { return (4.0 * fidelity - 1.0) / 3.0; }

  static WernerParams from_weight(double q) { return {(3.0 * q + 1.0) / 4.0}; }

  BellDiagonal as_bell_diagonal() const;
};

/// Two-qubit state diagonal in the Bell basis, stored as the probability
/// vector (p00, p01, p10, p11) over |B_kl> = (id (x) X^l Z^k)|phi+>.
/// k is the phase-error bit and l the amplitude-error bit.
///
/// Values are immutable; every operation returns a fresh state. Components
/// must be nonnegative and sum to 1. Drift beyond 1e-9 after composed
/// operations is treated as an internal error, never silently renormalized.
class BellDiagonal {
 public:
  BellDiagonal(double p00, double p01, double p10, double p11);

  static BellDiagonal perfect() { return BellDiagonal(1.0, 0.0, 0.0, 0.0); }
  static BellDiagonal werner(double fidelity);

  /// Fidelity with |phi+>, i.e. p00.
  double fidelity() const { return p_[0]; }

  /// Component for error bits (k, l).
  double component(int k, int l) const { return p_[(k << 1) | l]; }

  const std::array<double, 4>& probs() const { return p_; }

  bool operator==(const BellDiagonal&) const = default;

 private:
  std::array<double, 4> p_;
};

/// Shannon entropy of the Bell-diagonal probability vector, in bits.
/// 0 log 0 is taken as 0.
double entropy_bits(const BellDiagonal& state);

/// Closed form S(F) for Werner states:
///   S(F) = -F log2(F) - (1-F) log2((1-F)/3).
double werner_entropy(double fidelity);

/// Single-qubit depolarizing channel applied to one qubit of the pair.
/// On Bell-diagonal coefficients: p_kl -> p * p_kl + (1-p)/4. For Werner
/// input the weight transforms as q -> q * p_ldn.
BellDiagonal apply_ldn_one_qubit(const BellDiagonal& state, NoiseParams noise);

/// Depolarization to Werner form; keeps the fidelity F = p00.
WernerParams twirl_to_werner(const BellDiagonal& state);

/// Entanglement swapping via a perfect Bell measurement at the middle node.
/// The output distribution is the group convolution over Z2 x Z2:
///   out_{kl} = sum_{k1^k2=k, l1^l2=l} a_{k1l1} b_{k2l2},
/// with Pauli byproducts assumed corrected.
BellDiagonal swap_pairs(const BellDiagonal& a, const BellDiagonal& b);

/// Folds resource-state noise onto the elementary pair: one LDN layer per
/// qubit (both ends), so a noisy protocol becomes a perfect protocol acting
/// on this more noisy input. The same map gives the read-out noise applied to
/// output pairs at the end stations.
BellDiagonal effective_input(const BellDiagonal& state, NoiseParams resource_noise);

}  // namespace hashrep

#endif
