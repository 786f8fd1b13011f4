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

#ifndef HASHREP_RATES_H
#define HASHREP_RATES_H

#include <cstdint>
#include <stdexcept>

#include "hashrep/bell_state.hpp"
#include "hashrep/hashing_bounds.hpp"

namespace hashrep {

/// Full parameter set of one repeater configuration. Lengths in meters and
/// times in seconds internally; the config boundary accepts km.
struct RepeaterScenario {
  double total_length_m = 0.0;   // L
  int64_t n_links = 1;           // N
  double segment_length_m = 0.0; // l0 = L / N
  double eta = 1.0;              // heralded pair success probability, (0, 1]
  double t0_s = 0.0;             // elementary-pair time (creation + heralding)
  double tp_s = 0.0;             // local processing / Bell-measurement time
  double fiber_speed_m_s = 2e8;
  int64_t n_pairs = 0;           // ensemble size n
  DeltaSchedule schedule = DeltaSchedule::power(0.25);
  double epsilon = -1.0;         // multiplexing slack; < 0 means n^(-1/4)
  NoiseParams resource_noise;
  double f_in = 1.0;             // raw elementary-pair fidelity

  double classical_comm_time_s() const { return total_length_m / fiber_speed_m_s; }
  double resolved_epsilon() const;
  /// Checks ranges and l0 * N = L consistency; throws std::invalid_argument.
  void validate() const;
};

struct ChannelPlan {
  int64_t n_channels = 0;             // ceil(n (1/eta + epsilon))
  double shortfall_prob = 0.0;        // exp(-epsilon^2 n) per link
  double all_links_success = 0.0;     // (1 - shortfall)^N
};

ChannelPlan channel_count(int64_t n, double eta, double epsilon, int64_t n_links);

enum class TimingMode { kContinuous, kSingleShot };

struct RateReport {
  TimingMode mode = TimingMode::kContinuous;
  double yield_c = 0.0;              // on effective-noisy inputs
  double effective_fidelity = 0.0;
  double rate_per_channel_hz = 0.0;  // many-channel R
  double rate_single_channel_hz = 0.0;  // R1
  int64_t n_channels = 0;
  double rate_absolute_hz = 0.0;     // per-channel * channels
  double t_c_s = 0.0;                // reported; excluded from continuous rates
  double overhead_many = 0.0;
  double overhead_single = 0.0;
  double success_prob_all_links = 0.0;
};

/// Continuous operation: new elementary pairs start as soon as the previous
/// ones are processed, so classical communication never enters.
///   R = c eta / (t0 + tp)   per channel,
///   R1 = c n / (n (1/eta + epsilon) t0 + tp)   with a single channel.
/// The yield is computed on effective-noisy inputs. Throws ZeroYieldError
/// when the scenario cannot distill.
RateReport rate_continuous(const RepeaterScenario& scenario);

/// Single-shot operation: one end-to-end distribution, timed by
/// t0 + tp + t_c per round (t_c dominates at long distance).
RateReport rate_single_shot(const RepeaterScenario& scenario);

struct ZeroYieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StationRole { kIntermediate, kEndStation };

struct MemoryRequirement {
  double storage_time_s = 0.0;
  int64_t resource_qubits = 0;  // always 2n
  int64_t pair_buffer_qubits = 0;  // 2n in many-channel mode, 1 single-channel
  int64_t output_qubits = 0;       // m at end stations
  /// Earth-based repeaters keep t_c at most O(10^-1) s; longer storage times
  /// are flagged rather than rejected.
  bool exceeds_earthbound_scale = false;

  int64_t total_qubits() const { return resource_qubits + pair_buffer_qubits + output_qubits; }
};

/// Storage demands per station: intermediate stations hold the resource for
/// t0 only; the outermost stations keep output qubits alive for t_c.
MemoryRequirement memory_requirement(const RepeaterScenario& scenario, StationRole role,
                                     ChannelMode mode = ChannelMode::kManyChannel);

}  // namespace hashrep

#endif
