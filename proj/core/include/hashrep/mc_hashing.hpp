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

#ifndef HASHREP_MC_HASHING_H
#define HASHREP_MC_HASHING_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hashrep/bell_state.hpp"
#include "hashrep/gf2.hpp"
#include "hashrep/hashing_bounds.hpp"

namespace hashrep {

/// Classical error-string picture of n Bell-diagonal pairs: pair i carries a
/// phase bit k_i and an amplitude bit l_i, stored as the 2-bit symbol
/// (k << 1) | l. Hashing is a Clifford protocol on such ensembles, so its
/// full statistics live in parities of this 2n-bit string.
struct ErrorEnsemble {
  std::vector<uint8_t> symbols;  // one 2-bit symbol per pair
  BellDiagonal source = BellDiagonal::perfect();

  int64_t n() const { return static_cast<int64_t>(symbols.size()); }

  /// 2n-bit view; bit 2i is k_i, bit 2i+1 is l_i.
  BitVec to_bits() const;
  static std::vector<uint8_t> symbols_from_bits(const BitVec& bits);
};

/// One subset-parity round: a non-empty 2n-bit mask and the measured parity
/// of (mask AND true string).
struct ParityRound {
  BitVec subset;
  int outcome = 0;
};

/// Pair count above which the decoder switches from exhaustive candidate
/// enumeration (2^{2n} <= 2^26) to the one-sided collision search.
inline constexpr int64_t kExhaustivePairLimit = 13;

struct HashingRunResult {
  bool success = false;
  /// Unique surviving candidate (equals the truth on success); empty when the
  /// decoder had none or several.
  std::vector<uint8_t> decoded_symbols;
  int64_t rounds = 0;
  std::vector<ParityRound> parity_rounds;
  /// True when the collision search approximation was used (n > 13). Its
  /// error is one-sided: collisions can be missed, never invented.
  bool approximate = false;
};

/// Draws each pair's (k, l) i.i.d. from the source distribution.
/// Deterministic for a given seed.
ErrorEnsemble sample_ensemble(const BellDiagonal& source, int64_t n, uint64_t seed);

/// Runs r = ceil(n (S + 2 delta)) random subset-parity rounds and decodes:
/// candidates are the strings inside the likely set (empirical log-probability
/// per pair within delta of the source entropy, boundary ties included) that
/// satisfy every parity. Success iff exactly one candidate survives and it is
/// the ground truth. Throws std::domain_error when r would exceed 2n.
HashingRunResult run_hashing(const ErrorEnsemble& ensemble, double delta, uint64_t seed);

struct McReport {
  double f_in = 0.0;
  int64_t n = 0;
  double delta = 0.0;
  int64_t trials = 0;
  int64_t failures = 0;
  double empirical_p_fail = 0.0;
  double analytic_bound = 0.0;  // p1 + p2, may exceed 1 (vacuous)
  double wilson_low = 0.0;      // 95% Wilson interval on the failure rate
  double wilson_high = 0.0;
  bool approximate_decoder = false;

  /// The validation property: the analytic bound dominates the empirical
  /// failure rate at 95% confidence wherever the bound is informative.
  bool dominance_holds() const {
    return analytic_bound >= 1.0 || analytic_bound >= wilson_high;
  }
};

/// 95% Wilson score interval for x successes out of t trials.
std::pair<double, double> wilson_interval(int64_t x, int64_t t);

/// One McReport per n in the grid; empirical failure rates versus the
/// analytic p1 + p2 at the schedule's delta.
std::vector<McReport> validate_bound(double f_in, std::span<const int64_t> n_grid,
                                     const DeltaSchedule& schedule, int64_t trials,
                                     uint64_t seed);

struct ChainEstimate {
  int64_t trials = 0;
  int64_t all_links_succeeded = 0;
  double empirical_fidelity = 0.0;  // mean end-to-end fidelity estimate
  double fidelity_ci_low = 0.0;     // Wilson, scaled by the output-noise factor
  double fidelity_ci_high = 0.0;
  double analytic_lower = 0.0;      // bound composed with output noise
  double output_noise_fidelity = 0.0;
};

/// Per trial, runs N independent hashing instances on effective-noisy inputs.
/// When every link succeeds the end-to-end pair is perfect before read-out,
/// so the empirical fidelity is the all-links success rate times the
/// output-noise fidelity, compared against the analytic product bound.
ChainEstimate simulate_chain(double f_in, int64_t n_links, int64_t n, double delta,
                             NoiseParams resource_noise, int64_t trials, uint64_t seed);

}  // namespace hashrep

#endif
