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

#include "hashrep/bell_state.hpp"

#include <cmath>
#include <stdexcept>

namespace hashrep {

namespace {

constexpr double kConstructionTol = 1e-9;

double checked_component(double v) {
  if (std::isnan(v)) throw std::invalid_argument("BellDiagonal: NaN component");
  if (v < -1e-12) throw std::invalid_argument("BellDiagonal: negative component");
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

NoiseParams NoiseParams::from_error_rate(double rate) {
  if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("NoiseParams: error rate outside [0,1]");
  return {1.0 - rate};
}

BellDiagonal WernerParams::as_bell_diagonal() const {
  return BellDiagonal::werner(fidelity);
}

BellDiagonal::BellDiagonal(double p00, double p01, double p10, double p11)
    : p_{checked_component(p00), checked_component(p01), checked_component(p10),
         checked_component(p11)} {
  const double sum = p_[0] + p_[1] + p_[2] + p_[3];
  if (std::abs(sum - 1.0) > kConstructionTol) {
    throw std::logic_error("BellDiagonal: probabilities drifted from 1 beyond 1e-9");
  }
}

BellDiagonal BellDiagonal::werner(double fidelity) {
  if (fidelity < 0.0 || fidelity > 1.0) {
    throw std::invalid_argument("BellDiagonal::werner: fidelity outside [0,1]");
  }
  const double e = (1.0 - fidelity) / 3.0;
  return BellDiagonal(fidelity, e, e, e);
}

double entropy_bits(const BellDiagonal& state) {
  double s = 0.0;
  for (double p : state.probs()) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s < 0.0 ? 0.0 : s;
}

double werner_entropy(double fidelity) {
  if (fidelity < 0.0 || fidelity > 1.0) {
    throw std::invalid_argument("werner_entropy: fidelity outside [0,1]");
  }
  double s = 0.0;
  if (fidelity > 0.0) s -= fidelity * std::log2(fidelity);
  const double e = (1.0 - fidelity) / 3.0;
  if (e > 0.0) s -= (1.0 - fidelity) * std::log2(e);
  return s;
}

BellDiagonal apply_ldn_one_qubit(const BellDiagonal& state, NoiseParams noise) {
  const double p = noise.p_ldn;
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("apply_ldn_one_qubit: p_ldn outside [0,1]");
  // The four Paulis on one qubit map |B_kl> across the whole Bell basis, so
  // the uniform part mixes every component equally.
  const double mix = (1.0 - p) / 4.0;
  const auto& q = state.probs();
  return BellDiagonal(p * q[0] + mix, p * q[1] + mix, p * q[2] + mix, p * q[3] + mix);
}

WernerParams twirl_to_werner(const BellDiagonal& state) {
  return WernerParams{state.fidelity()};
}

BellDiagonal swap_pairs(const BellDiagonal& a, const BellDiagonal& b) {
  std::array<double, 4> out{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out[i ^ j] += a.probs()[i] * b.probs()[j];
    }
  }
  return BellDiagonal(out[0], out[1], out[2], out[3]);
}

BellDiagonal effective_input(const BellDiagonal& state, NoiseParams resource_noise) {
  return apply_ldn_one_qubit(apply_ldn_one_qubit(state, resource_noise), resource_noise);
}

}  // namespace hashrep
