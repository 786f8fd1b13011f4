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

#include "hashrep/recurrence.hpp"

#include <cmath>
#include <stdexcept>

namespace hashrep {

DejmpsResult dejmps_step(const BellDiagonal& a, const BellDiagonal& b,
                         NoiseParams resource_noise) {
  const BellDiagonal an = effective_input(a, resource_noise);
  const BellDiagonal bn = effective_input(b, resource_noise);
  // Coefficient map in (p00, p01, p10, p11) order; the index pairs follow the
  // error-bit algebra of the rotated bilateral-CNOT + Z-parity rule and are
  // pinned against the density-matrix oracle in the tests.
  const auto& pa = an.probs();
  const auto& pb = bn.probs();
  const double success = (pa[0] + pa[3]) * (pb[0] + pb[3]) + (pa[1] + pa[2]) * (pb[1] + pb[2]);
  DejmpsResult out;
  out.p_success = success;
  if (success <= 0.0) return out;  // flagged by p_success == 0
  const double q00 = (pa[0] * pb[0] + pa[3] * pb[3]) / success;
  const double q01 = (pa[1] * pb[1] + pa[2] * pb[2]) / success;
  const double q10 = (pa[0] * pb[3] + pa[3] * pb[0]) / success;
  const double q11 = (pa[1] * pb[2] + pa[2] * pb[1]) / success;
  out.state = BellDiagonal(q00, q01, q10, q11);
  return out;
}

std::optional<RecurrenceState> purify_to(RecurrenceState rs, double f_work,
                                         NoiseParams resource_noise, int max_rounds) {
  const double span = std::pow(2.0, rs.level);
  for (int round = 0; round < max_rounds; ++round) {
    if (rs.state.fidelity() >= f_work) return rs;
    const BellDiagonal in =
        rs.pending_output_noise ? effective_input(rs.state, resource_noise) : rs.state;
    const DejmpsResult step = dejmps_step(in, in, resource_noise);
    if (step.p_success <= 0.0 || step.state.fidelity() <= rs.state.fidelity() + 1e-15) {
      return std::nullopt;  // fixed point below f_work
    }
    rs.state = step.state;
    rs.pending_output_noise = true;
    rs.pairs_consumed *= 2.0 / step.p_success;
    rs.pairs_best_case *= 2.0;
    rs.time_elapsed += 2.0 * span;
  }
  return rs.state.fidelity() >= f_work ? std::optional(rs) : std::nullopt;
}

std::optional<RecurrenceState> bdcz_chain(double f_in, int levels, double f_work,
                                          NoiseParams resource_noise) {
  if (levels < 0) throw std::invalid_argument("bdcz_chain: levels must be >= 0");
  const bool purify = f_work > 0.0;
  RecurrenceState rs;
  rs.state = BellDiagonal::werner(f_in);

  if (purify) {
    auto p = purify_to(rs, f_work, resource_noise);
    if (!p) return std::nullopt;
    rs = *p;
  }
  for (int level = 0; level < levels; ++level) {
    // Swap two identical pairs. The Bell measurement's noise lands on the
    // measured qubit of each side, on top of any pending output layer there;
    // the outer ends keep their pending layers.
    const double measured_p =
        resource_noise.p_ldn * (rs.pending_output_noise ? resource_noise.p_ldn : 1.0);
    const BellDiagonal side = apply_ldn_one_qubit(rs.state, NoiseParams{measured_p});
    rs.state = swap_pairs(side, side);
    rs.time_elapsed += std::pow(2.0, level);  // one-way notification, pre-swap span
    rs.level = level + 1;
    if (purify) {
      auto p = purify_to(rs, f_work, resource_noise);
      if (!p) return std::nullopt;
      rs = *p;
    }
  }
  return rs;
}

namespace {

WorkingFidelityPoint evaluate_point(double f_in, int levels, double f_work,
                                    NoiseParams resource_noise, BellDiagonal* final_state) {
  WorkingFidelityPoint pt;
  pt.f_work = f_work;
  const auto chain = bdcz_chain(f_in, levels, f_work, resource_noise);
  if (!chain) return pt;
  pt.feasible = true;
  pt.pairs = chain->pairs_consumed;
  pt.pairs_best_case = chain->pairs_best_case;
  pt.time = chain->time_elapsed;
  pt.rate = 1.0 / (pt.time * pt.pairs);
  pt.f_out = effective_input(chain->state, resource_noise).fidelity();
  if (final_state) *final_state = chain->state;
  return pt;
}

}  // namespace

std::optional<WorkingFidelityOptimum> optimize_working_fidelity(double f_in, int levels,
                                                                NoiseParams resource_noise) {
  // Feasible working fidelities live between the post-swap recovery region
  // and the noisy DEJMPS fixed point; probe the fixed point first.
  BellDiagonal probe = BellDiagonal::werner(f_in);
  double f_max = probe.fidelity();
  for (int i = 0; i < 4000; ++i) {
    const BellDiagonal in = i == 0 ? probe : effective_input(probe, resource_noise);
    const auto step = dejmps_step(in, in, resource_noise);
    if (step.p_success <= 0.0 || step.state.fidelity() <= f_max + 1e-13) break;
    probe = step.state;
    f_max = probe.fidelity();
  }

  WorkingFidelityOptimum result;
  const int kGrid = 160;
  const double lo = std::max(0.55, f_in - 0.15);
  const double hi = f_max - 1e-6;
  if (hi <= lo) return std::nullopt;

  double best_rate = 0.0;
  double best_fw = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double fw = lo + (hi - lo) * static_cast<double>(i) / kGrid;
    const auto pt = evaluate_point(f_in, levels, fw, resource_noise, nullptr);
    result.sweep.push_back(pt);
    if (pt.feasible && pt.rate > best_rate) {
      best_rate = pt.rate;
      best_fw = fw;
    }
  }
  if (best_fw < 0.0) return std::nullopt;

  // Golden-section refinement around the best grid point.
  const double gr = 0.6180339887498949;
  double a = std::max(lo, best_fw - (hi - lo) / kGrid);
  double b = std::min(hi, best_fw + (hi - lo) / kGrid);
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  const auto rate_at = [&](double fw) {
    const auto pt = evaluate_point(f_in, levels, fw, resource_noise, nullptr);
    return pt.feasible ? pt.rate : 0.0;
  };
  double r1 = rate_at(x1), r2 = rate_at(x2);
  for (int it = 0; it < 48 && b - a > 1e-10; ++it) {
    if (r1 < r2) {
      a = x1;
      x1 = x2;
      r1 = r2;
      x2 = a + gr * (b - a);
      r2 = rate_at(x2);
    } else {
      b = x2;
      x2 = x1;
      r2 = r1;
      x1 = b - gr * (b - a);
      r1 = rate_at(x1);
    }
  }
  const double refined = r1 > r2 ? x1 : x2;
  const double refined_rate = std::max(r1, r2);
  const double final_fw = refined_rate > best_rate ? refined : best_fw;

  result.best = evaluate_point(f_in, levels, final_fw, resource_noise, &result.final_state);
  if (!result.best.feasible) return std::nullopt;
  return result;
}

}  // namespace hashrep
