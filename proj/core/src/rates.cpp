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

#include "hashrep/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace hashrep {

double RepeaterScenario::resolved_epsilon() const {
  if (epsilon >= 0.0) return epsilon;
  return std::pow(static_cast<double>(n_pairs), -0.25);
}

void RepeaterScenario::validate() const {
  if (n_links < 1) throw std::invalid_argument("scenario: n_links must be >= 1");
  if (!(eta > 0.0) || eta > 1.0) throw std::invalid_argument("scenario: eta must lie in (0, 1]");
  if (!(t0_s > 0.0)) throw std::invalid_argument("scenario: t0 must be positive");
  if (!(tp_s > 0.0)) throw std::invalid_argument("scenario: tp must be positive");
  if (!(fiber_speed_m_s > 0.0)) throw std::invalid_argument("scenario: fiber speed must be positive");
  if (n_pairs < 1) throw std::invalid_argument("scenario: n must be >= 1");
  if (!(f_in > 0.25) || f_in > 1.0) throw std::invalid_argument("scenario: fidelity outside (0.25, 1]");
  if (!(segment_length_m > 0.0)) throw std::invalid_argument("scenario: l0 must be positive");
  const double expect = segment_length_m * static_cast<double>(n_links);
  if (std::abs(expect - total_length_m) > 0.5 * segment_length_m) {
    throw std::invalid_argument("scenario: l0 * N inconsistent with L");
  }
}

ChannelPlan channel_count(int64_t n, double eta, double epsilon, int64_t n_links) {
  if (n < 1) throw std::invalid_argument("channel_count: n must be >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("channel_count: eta must be positive");
  if (epsilon < 0.0) throw std::invalid_argument("channel_count: epsilon must be >= 0");
  if (n_links < 1) throw std::invalid_argument("channel_count: n_links must be >= 1");
  ChannelPlan plan;
  plan.n_channels =
      static_cast<int64_t>(std::ceil(static_cast<double>(n) * (1.0 / eta + epsilon) - 1e-12));
  plan.shortfall_prob = std::exp(-epsilon * epsilon * static_cast<double>(n));
  plan.all_links_success =
      plan.shortfall_prob >= 1.0
          ? 0.0
          : std::exp(static_cast<double>(n_links) * std::log1p(-plan.shortfall_prob));
  return plan;
}

namespace {

RateReport build_report(const RepeaterScenario& s, TimingMode mode) {
  s.validate();
  RateReport rep;
  rep.mode = mode;
  rep.t_c_s = s.classical_comm_time_s();

  const BellDiagonal eff = effective_input(BellDiagonal::werner(s.f_in), s.resource_noise);
  rep.effective_fidelity = eff.fidelity();
  const double entropy = entropy_bits(eff);
  const double delta = s.schedule.resolve(s.n_pairs, entropy);
  if (delta < 0.0) throw ZeroYieldError("rate: schedule gives negative delta for this n");
  const double c = 1.0 - entropy - 2.0 * delta;
  if (c <= 0.0) throw ZeroYieldError("rate: zero yield at these parameters");
  rep.yield_c = c;

  const double eps = s.resolved_epsilon();
  const auto plan = channel_count(s.n_pairs, s.eta, eps, s.n_links);
  rep.n_channels = plan.n_channels;
  rep.success_prob_all_links = plan.all_links_success;

  const double n = static_cast<double>(s.n_pairs);
  // Continuous mode excludes t_c; single-shot pays it once per round.
  const double extra = mode == TimingMode::kSingleShot ? rep.t_c_s : 0.0;
  rep.rate_per_channel_hz = c * s.eta / (s.t0_s + s.tp_s + extra);
  rep.rate_single_channel_hz =
      c * n / (n * (1.0 / s.eta + eps) * s.t0_s + s.tp_s + extra);
  rep.rate_absolute_hz = rep.rate_per_channel_hz * static_cast<double>(plan.n_channels);

  rep.overhead_many = yield_and_overhead(rep.effective_fidelity, delta,
                                         ChannelMode::kManyChannel)
                          .overhead;
  rep.overhead_single = yield_and_overhead(rep.effective_fidelity, delta,
                                           ChannelMode::kSingleChannel, s.n_pairs)
                            .overhead;
  return rep;
}

}  // namespace

RateReport rate_continuous(const RepeaterScenario& scenario) {
  return build_report(scenario, TimingMode::kContinuous);
}

RateReport rate_single_shot(const RepeaterScenario& scenario) {
  return build_report(scenario, TimingMode::kSingleShot);
}

MemoryRequirement memory_requirement(const RepeaterScenario& scenario, StationRole role,
                                     ChannelMode mode) {
  scenario.validate();
  MemoryRequirement req;
  req.resource_qubits = 2 * scenario.n_pairs;
  req.pair_buffer_qubits = mode == ChannelMode::kManyChannel ? 2 * scenario.n_pairs : 1;
  switch (role) {
    case StationRole::kIntermediate:
      req.storage_time_s = scenario.t0_s;
      break;
    case StationRole::kEndStation: {
      req.storage_time_s = scenario.classical_comm_time_s();
      const BellDiagonal eff =
          effective_input(BellDiagonal::werner(scenario.f_in), scenario.resource_noise);
      const double entropy = entropy_bits(eff);
      const double delta = scenario.schedule.resolve(scenario.n_pairs, entropy);
      const double c = 1.0 - entropy - 2.0 * delta;
      req.output_qubits =
          c > 0.0 ? static_cast<int64_t>(std::floor(static_cast<double>(scenario.n_pairs) * c +
                                                    1e-9))
                  : 0;
      break;
    }
  }
  req.exceeds_earthbound_scale = req.storage_time_s > 0.1;
  return req;
}

}  // namespace hashrep
