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

#ifndef HASHREP_TESTS_ORACLES_H
#define HASHREP_TESTS_ORACLES_H

// Test-only reference implementations. Everything here works on dense
// density matrices (or brute randomness) and stays independent of the
// Bell-coefficient code paths it checks.

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "hashrep/bell_state.hpp"
#include "hashrep/rng.hpp"

namespace hashrep::oracle {

using Cx = std::complex<double>;

struct Mat {
  explicit Mat(size_t dim) : dim(dim), a(dim * dim, Cx{0.0, 0.0}) {}
  size_t dim;
  std::vector<Cx> a;
  Cx& at(size_t r, size_t c) { return a[r * dim + c]; }
  const Cx& at(size_t r, size_t c) const { return a[r * dim + c]; }
};

Mat multiply(const Mat& x, const Mat& y);
Mat kron(const Mat& x, const Mat& y);
Mat dagger(const Mat& x);

/// |B_kl> = (id (x) X^l Z^k)|phi+> as a 4-vector (basis |00>,|01>,|10>,|11>).
std::array<Cx, 4> bell_ket(int k, int l);

/// 4x4 density matrix of a Bell-diagonal state.
Mat bell_density(const BellDiagonal& state);

/// Bell-basis diagonal <B_kl|rho|B_kl> of a two-qubit density matrix.
std::array<double, 4> bell_coefficients(const Mat& rho);

/// Single-qubit depolarizing channel with reliability p on the given qubit
/// (0 = first tensor factor) of an n-qubit density matrix.
Mat depolarize(const Mat& rho, int qubit, int n_qubits, double p);

/// Deutsch et al. purification step on two pair states, via explicit
/// rotations, bilateral CNOT, Z measurements and postselection on equal
/// outcomes. Returns the kept pair's density matrix and the success
/// probability.
std::pair<Mat, double> dejmps(const Mat& pair_a, const Mat& pair_b);

/// Entanglement swap of pairs (A1,B1), (A2,B2): projects (B1,A2) onto
/// |phi+>, renormalizes, returns the (A1,B2) state. For Bell-diagonal inputs
/// every outcome branch gives the corrected state, so one branch suffices.
Mat swap_via_projection(const Mat& pair_a, const Mat& pair_b);

/// Expected elementary pairs per output pair for a sequence of round success
/// probabilities, estimated by simulating the random retry tree.
double stochastic_pair_cost(const std::vector<double>& round_success, int64_t samples,
                            Rng& rng);

}  // namespace hashrep::oracle

#endif
