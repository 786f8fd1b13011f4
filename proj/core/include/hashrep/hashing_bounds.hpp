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

#ifndef HASHREP_HASHING_BOUNDS_H
#define HASHREP_HASHING_BOUNDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hashrep {

/// Quantities entering the Bennett-inequality failure bound for hashing on
/// Werner-form inputs with fidelity F:
///   entropy   S(F) = -F log2(F) - (1-F) log2((1-F)/3)
///   scale     a(F) = |log2((1-F)/3)| + S(F)
///   variance  V(F) = F log2^2(F) + (1-F) log2^2((1-F)/3) - S^2(F)
///   ratio     g(F) = V(F)/a(F)
struct BennettTerms {
  double entropy = 0.0;
  double scale = 0.0;  // +infinity at F = 1, flagged by scale_finite
  double variance = 0.0;
  double ratio = 0.0;
  bool scale_finite = true;
};

/// Evaluates the closed forms above. Requires F in (0.25, 1]; F = 1 is the
/// zero-entropy limit with scale flagged infinite. Throws std::domain_error
/// outside the domain. The bound itself is only meaningful above the hashing
/// threshold (~0.8107); the terms evaluate on the whole domain regardless.
BennettTerms bennett_terms(double fidelity);

/// Likely-subspace failure bound:
///   p1 <= 2 exp{ (-n/a) [ (g + delta) ln(1 + delta/g) - delta ] }.
/// The bracket logarithm is natural; entropies stay in bits. Equals 2 at
/// delta = 0, and 0 in the F -> 1 limit for delta > 0.
double p1_bound(double fidelity, double n, double delta);

/// Collision failure bound: p2 <= 2^(-n delta).
double p2_bound(double n, double delta);

/// ln(p1 + p2), computed stably for values far below double underflow in the
/// linear domain. Shared by the n->1 machinery and the decay fits.
double log_failure_bound(double fidelity, double n, double delta);

/// Root of S(F) = 1 on (0.75, 1): the minimum Werner fidelity at which
/// hashing has positive asymptotic yield. Bisection, ~0.8107.
double hashing_threshold();

/// Choice of the slack delta as a function of the ensemble size n.
class DeltaSchedule {
 public:
  enum class Kind { kPower, kFixed, kNToOne };

  /// delta = n^(-exponent); exponent must lie in (0, 1).
  static DeltaSchedule power(double exponent);
  /// Constant delta >= 0.
  static DeltaSchedule fixed(double value);
  /// delta = ((n-1)/n - S)/2, the unique choice with one output pair.
  static DeltaSchedule n_to_1();

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }

  /// Resolves to a concrete delta for this n; the n->1 schedule needs the
  /// ensemble entropy and may come out negative (n too small).
  double resolve(int64_t n, double entropy) const;

  std::string describe() const;

  bool operator==(const DeltaSchedule&) const = default;

 private:
  DeltaSchedule(Kind kind, double param) : kind_(kind), param_(param) {}
  Kind kind_;
  double param_;
};

/// Every derived quantity for one (F, n, delta, N) point.
struct HashingBound {
  double f_in = 0.0;
  int64_t n = 0;
  double delta = 0.0;
  int64_t n_links = 1;
  BennettTerms terms;
  double p1 = 0.0;  // raw bound value in [0, 2]
  double p2 = 0.0;  // raw bound value in [0, 1]
  /// Global private fidelity over all links, exact product form
  /// (1 - p1 - p2)^N clamped to [0, 1].
  double f_gp = 0.0;
  /// First-order form max(0, 1 - N (p1 + p2)), kept for comparisons.
  double f_gp_linear = 0.0;
  double yield_c = 0.0;  // 1 - S - 2 delta; may be <= 0 (no output pairs)
  int64_t m = 0;         // floor(n * yield), never negative

  bool distillable() const { return yield_c > 0.0; }
};

/// Fills a complete HashingBound for n pairs of fidelity f_in per link and
/// n_links links. Yield <= 0 is a reportable outcome, not an error; the
/// schedule resolving to delta < 0 (n->1 with n too small) returns nullopt.
std::optional<HashingBound> global_private_fidelity(double f_in, int64_t n,
                                                    const DeltaSchedule& schedule,
                                                    int64_t n_links);

enum class ChannelMode { kManyChannel, kSingleChannel };

struct YieldOverhead {
  double yield_c = 0.0;   // clamped at 0
  double overhead = 0.0;  // +infinity when yield <= 0
  bool overhead_finite = false;
};

/// Yield c = 1 - S - 2 delta and per-pair overhead:
/// many channels O = 4/c, single channel O = 2/c + 1/n.
YieldOverhead yield_and_overhead(double f_in, double delta, ChannelMode mode,
                                 int64_t n = 0);

struct NToOneBound {
  double fidelity = 0.0;  // F' lower bound, clamped to [0, 1]
  double delta = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

/// n -> 1 hashing: all pairs but one measured, delta = ((n-1)/n - S)/2.
/// Returns nullopt when that delta is negative (n too small to distill).
std::optional<NToOneBound> n_to_1_fidelity(double f_in, int64_t n);

/// Exponential-decay fit 1 - alpha exp(-beta n) to the n->1 bound.
struct FitParams {
  double alpha = 0.0;
  double beta = 0.0;
  double r_squared = 0.0;
  bool good_fit = false;  // R^2 >= 0.99
};

/// Least-squares fit of ln(1 - F'(n)) = ln(alpha) - beta n over [n_from, n_to],
/// then alpha inflated so the fitted curve lower-bounds F' at every grid point.
FitParams fit_alpha_beta(double f_in, int64_t n_from, int64_t n_to, int64_t n_step = 0);

struct NMinResult {
  bool reachable = false;
  int64_t n_min = 0;
  /// Cross-check estimate beta^{-1} ln(alpha N / (1 - F_target)) from the fit.
  double fit_estimate = 0.0;
  FitParams fit;
};

/// Smallest n such that 1 - N (1 - F'(n)) >= f_target, by exponential-then-
/// binary search, capped at `cap` (default 10^7) with an explicit unreachable
/// outcome.
NMinResult n_min_search(double f_in, int64_t n_links, double f_target,
                        int64_t cap = 10000000);

struct ConcatLevel {
  int level = 0;
  double fidelity = 0.0;
  double total_pairs = 0.0;  // block_size^level
};

struct ConcatResult {
  std::vector<ConcatLevel> levels;
  bool stalled = false;  // F_{k+1} <= F_k at some level
  bool feasible = true;  // level-1 delta >= 0
};

/// Concatenated n -> 1 hashing with fixed block size; inputs re-twirled to
/// Werner form between levels (implicit, the bound is Werner-parameterized).
ConcatResult concatenated_n_to_1(double f_in, int64_t block_size, int levels);

}  // namespace hashrep

#endif
