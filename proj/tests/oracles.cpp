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

#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace hashrep::oracle {

namespace {

Mat identity(size_t dim) {
  Mat m(dim);
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat pauli(int which) {  // 0:I 1:X 2:Y 3:Z
  Mat m(2);
  switch (which) {
    case 0:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = 1.0;
      break;
    case 1:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case 2:
      m.at(0, 1) = Cx{0.0, -1.0};
      m.at(1, 0) = Cx{0.0, 1.0};
      break;
    case 3:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli");
  }
  return m;
}

/// Embeds a 2x2 operator on one qubit of an n-qubit register
/// (qubit 0 = most significant factor).
Mat embed(const Mat& op, int qubit, int n_qubits) {
  Mat out = identity(1);
  for (int q = 0; q < n_qubits; ++q) {
    out = kron(out, q == qubit ? op : identity(2));
  }
  return out;
}

Mat conjugate(const Mat& u, const Mat& rho) { return multiply(multiply(u, rho), dagger(u)); }

/// exp(-i theta X / 2) as a 2x2 matrix.
Mat x_rotation(double theta) {
  Mat m(2);
  m.at(0, 0) = std::cos(theta / 2.0);
  m.at(1, 1) = std::cos(theta / 2.0);
  m.at(0, 1) = Cx{0.0, -std::sin(theta / 2.0)};
  m.at(1, 0) = Cx{0.0, -std::sin(theta / 2.0)};
  return m;
}

Mat cnot_matrix(int control, int target, int n_qubits) {
  const size_t dim = size_t{1} << n_qubits;
  Mat m(dim);
  for (size_t b = 0; b < dim; ++b) {
    const int cbit = (b >> (n_qubits - 1 - control)) & 1;
    size_t to = b;
    if (cbit) to ^= size_t{1} << (n_qubits - 1 - target);
    m.at(to, b) = 1.0;
  }
  return m;
}

}  // namespace

Mat multiply(const Mat& x, const Mat& y) {
  if (x.dim != y.dim) throw std::invalid_argument("multiply: dim mismatch");
  Mat out(x.dim);
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t k = 0; k < x.dim; ++k) {
      const Cx v = x.at(i, k);
      if (v == Cx{0.0, 0.0}) continue;
      for (size_t j = 0; j < x.dim; ++j) out.at(i, j) += v * y.at(k, j);
    }
  }
  return out;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.dim * y.dim);
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t j = 0; j < x.dim; ++j) {
      for (size_t k = 0; k < y.dim; ++k) {
        for (size_t l = 0; l < y.dim; ++l) {
          out.at(i * y.dim + k, j * y.dim + l) = x.at(i, j) * y.at(k, l);
        }
      }
    }
  }
  return out;
}

Mat dagger(const Mat& x) {
  Mat out(x.dim);
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t j = 0; j < x.dim; ++j) out.at(i, j) = std::conj(x.at(j, i));
  }
  return out;
}

std::array<Cx, 4> bell_ket(int k, int l) {
  const double s = 1.0 / std::sqrt(2.0);
  // (id (x) X^l Z^k) (|00> + |11>)/sqrt(2)
  std::array<Cx, 4> ket{Cx{s, 0.0}, 0.0, 0.0, Cx{s, 0.0}};  // phi+
  if (k) ket[3] *= -1.0;                                     // Z on the second qubit
  if (l) {
    std::swap(ket[0], ket[1]);  // X on the second qubit
    std::swap(ket[2], ket[3]);
  }
  return ket;
}

Mat bell_density(const BellDiagonal& state) {
  Mat rho(4);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const auto ket = bell_ket(k, l);
      const double p = state.component(k, l);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) rho.at(i, j) += p * ket[i] * std::conj(ket[j]);
      }
    }
  }
  return rho;
}

std::array<double, 4> bell_coefficients(const Mat& rho) {
  if (rho.dim != 4) throw std::invalid_argument("bell_coefficients: need a two-qubit state");
  std::array<double, 4> out{};
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const auto ket = bell_ket(k, l);
      Cx val = 0.0;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) val += std::conj(ket[i]) * rho.at(i, j) * ket[j];
      }
      out[(k << 1) | l] = val.real();
    }
  }
  return out;
}

Mat depolarize(const Mat& rho, int qubit, int n_qubits, double p) {
  Mat out(rho.dim);
  for (size_t i = 0; i < rho.a.size(); ++i) out.a[i] = p * rho.a[i];
  for (int s = 0; s < 4; ++s) {
    const Mat u = embed(pauli(s), qubit, n_qubits);
    const Mat term = conjugate(u, rho);
    for (size_t i = 0; i < rho.a.size(); ++i) out.a[i] += (1.0 - p) / 4.0 * term.a[i];
  }
  return out;
}

std::pair<Mat, double> dejmps(const Mat& pair_a, const Mat& pair_b) {
  // Qubits: A1 B1 A2 B2 (A = one lab, B = the other; pair 2 is measured).
  Mat rho = kron(pair_a, pair_b);
  const Mat ua = x_rotation(M_PI / 2.0);    // exp(-i pi X / 4)
  const Mat ub = x_rotation(-M_PI / 2.0);   // exp(+i pi X / 4)
  for (const auto& [op, qubit] : {std::pair{&ua, 0}, {&ub, 1}, {&ua, 2}, {&ub, 3}}) {
    rho = conjugate(embed(*op, qubit, 4), rho);
  }
  rho = conjugate(cnot_matrix(0, 2, 4), rho);  // A1 -> A2
  rho = conjugate(cnot_matrix(1, 3, 4), rho);  // B1 -> B2

  // Keep outcomes where the Z measurements of A2, B2 coincide.
  Mat kept(4);
  double p_success = 0.0;
  for (size_t i = 0; i < 16; ++i) {
    const int a2_i = (i >> 1) & 1, b2_i = i & 1;
    if (a2_i != b2_i) continue;
    p_success += rho.at(i, i).real();
    for (size_t j = 0; j < 16; ++j) {
      const int a2_j = (j >> 1) & 1, b2_j = j & 1;
      if (a2_j != b2_j || a2_i != a2_j) continue;  // same measurement record
      kept.at(i >> 2, j >> 2) += rho.at(i, j);
    }
  }
  if (p_success > 0.0) {
    for (auto& v : kept.a) v /= p_success;
  }
  return {kept, p_success};
}

Mat swap_via_projection(const Mat& pair_a, const Mat& pair_b) {
  // Qubits A1 B1 A2 B2; project (B1, A2) onto |phi+>.
  Mat rho = kron(pair_a, pair_b);
  const auto phi = bell_ket(0, 0);
  Mat out(4);
  double norm = 0.0;
  // <phi+|_{B1 A2} rho |phi+>_{B1 A2}, indices (A1 B2) remain.
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      for (int a1p = 0; a1p < 2; ++a1p) {
        for (int b2p = 0; b2p < 2; ++b2p) {
          Cx sum = 0.0;
          for (int m = 0; m < 4; ++m) {  // (B1 A2) index for the bra side
            for (int mp = 0; mp < 4; ++mp) {
              const size_t row = (static_cast<size_t>(a1) << 3) | (static_cast<size_t>(m) << 1) |
                                 static_cast<size_t>(b2);
              const size_t col = (static_cast<size_t>(a1p) << 3) |
                                 (static_cast<size_t>(mp) << 1) | static_cast<size_t>(b2p);
              sum += std::conj(phi[m]) * rho.at(row, col) * phi[mp];
            }
          }
          out.at((a1 << 1) | b2, (a1p << 1) | b2p) = sum;
        }
      }
    }
  }
  for (int d = 0; d < 4; ++d) norm += out.at(d, d).real();
  if (norm > 0.0) {
    for (auto& v : out.a) v /= norm;
  }
  return out;
}

double stochastic_pair_cost(const std::vector<double>& round_success, int64_t samples,
                            Rng& rng) {
  // Cost of producing one pair that has passed rounds [0, r).
  struct Sim {
    const std::vector<double>& ps;
    Rng& rng;
    double make(size_t r) {
      if (r == 0) return 1.0;
      for (;;) {
        const double cost = make(r - 1) + make(r - 1);
        if (rng.next_double() < ps[r - 1]) return cost;
        // Failed attempts still consumed their inputs; try again.
        total_waste += cost;
      }
    }
    double total_waste = 0.0;
  };
  double total = 0.0;
  for (int64_t s = 0; s < samples; ++s) {
    Sim sim{round_success, rng, 0.0};
    const double kept = sim.make(round_success.size());
    total += kept + sim.total_waste;
  }
  return total / static_cast<double>(samples);
}

}  // namespace hashrep::oracle
