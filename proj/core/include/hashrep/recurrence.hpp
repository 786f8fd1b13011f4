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

#ifndef HASHREP_RECURRENCE_H
#define HASHREP_RECURRENCE_H

#include <optional>
#include <vector>

#include "hashrep/bell_state.hpp"

namespace hashrep {

struct DejmpsResult {
  BellDiagonal state = BellDiagonal::perfect();
  double p_success = 0.0;
};

/// One recurrence purification step (Deutsch et al. map) on Bell-diagonal
/// coefficients, consuming pairs a and b. Implementation noise enters as one
/// LDN layer on each of the four input qubits (the measurement-based noise
/// folding); read-out noise on the kept pair is deferred to the end of the
/// protocol.
DejmpsResult dejmps_step(const BellDiagonal& a, const BellDiagonal& b,
                         NoiseParams resource_noise);

/// Chain bookkeeping: the current pair state, its nesting level (span
/// 2^level elementary segments), the expected number of elementary pairs
/// consumed per segment, and the elapsed time in t_segment units.
///
/// pending_output_noise records that the pair left a measurement-based step
/// whose resource output qubits are noisy: that LDN layer is consumed by the
/// next step touching the pair (or by the final read-out), so junctions
/// between steps carry two layers per qubit while entry and exit carry one.
struct RecurrenceState {
  BellDiagonal state = BellDiagonal::perfect();
  int level = 0;
  double pairs_consumed = 1.0;
  double pairs_best_case = 1.0;  // attempt counting with every round succeeding
  double time_elapsed = 0.0;
  bool pending_output_noise = false;
};

/// Purifies identical copies until fidelity >= f_work. Expected resources
/// multiply by 2/p_success per round; each round costs one two-way classical
/// exchange over the current span (2 * 2^level t_segment). Returns nullopt
/// when f_work is unreachable (fidelity stops increasing first).
std::optional<RecurrenceState> purify_to(RecurrenceState rs, double f_work,
                                         NoiseParams resource_noise, int max_rounds = 200);

/// Nested purify-and-swap over 2^levels segments: purify to the working
/// fidelity, swap pairwise (one LDN layer on each measured qubit, one one-way
/// notification over the pre-swap span), repeat, with a final purification at
/// full span. levels = 0 purifies only. f_work <= 0 disables purification.
std::optional<RecurrenceState> bdcz_chain(double f_in, int levels, double f_work,
                                          NoiseParams resource_noise);

struct WorkingFidelityPoint {
  double f_work = 0.0;
  bool feasible = false;
  double pairs = 0.0;
  double pairs_best_case = 0.0;
  double time = 0.0;
  double rate = 0.0;   // 1 / (time * pairs)
  double f_out = 0.0;  // final fidelity after read-out noise on both qubits
};

struct WorkingFidelityOptimum {
  WorkingFidelityPoint best;
  BellDiagonal final_state = BellDiagonal::perfect();
  std::vector<WorkingFidelityPoint> sweep;
};

/// Sweeps the working fidelity (grid plus golden-section refinement around
/// the best grid point) maximizing rate = 1 / (time * pairs). The sweep data
/// reproduces the resource/time-versus-working-fidelity curves. Returns
/// nullopt when no working fidelity is feasible.
std::optional<WorkingFidelityOptimum> optimize_working_fidelity(double f_in, int levels,
                                                                NoiseParams resource_noise);

}  // namespace hashrep

#endif
