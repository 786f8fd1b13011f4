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

#include "hashrep/mc_hashing.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "hashrep/rng.hpp"

namespace hashrep {

namespace {

constexpr double kLikelyTol = 1e-9;  // boundary ties count as likely
constexpr int kCollisionSearchSamples = 256;

struct LikelyTest {
  double log_probs[4];
  double center;  // n * S
  double slack;   // n * delta + tolerance

  LikelyTest(const BellDiagonal& source, int64_t n, double delta) {
    for (int s = 0; s < 4; ++s) {
      const double p = source.probs()[s];
      log_probs[s] = p > 0.0 ? std::log2(p) : -std::numeric_limits<double>::infinity();
    }
    center = static_cast<double>(n) * entropy_bits(source);
    slack = static_cast<double>(n) * delta + kLikelyTol;
  }

  bool likely(std::span<const uint8_t> symbols) const {
    double neg_log = 0.0;
    for (uint8_t s : symbols) {
      const double lp = log_probs[s];
      if (lp == -std::numeric_limits<double>::infinity()) return false;
      neg_log -= lp;
    }
    return std::abs(neg_log - center) <= slack;
  }
};

BitVec random_nonempty_mask(size_t nbits, Rng& rng) {
  BitVec mask(nbits);
  do {
    auto words = mask.words();
    for (size_t w = 0; w < words.size(); ++w) words[w] = rng.next_u64();
    // Clear slack bits above nbits.
    const size_t rem = nbits & 63;
    if (rem) words[words.size() - 1] &= (uint64_t{1} << rem) - 1;
  } while (!mask.any());
  return mask;
}

int64_t round_count(const ErrorEnsemble& ensemble, double delta) {
  const double s = entropy_bits(ensemble.source);
  const double raw = static_cast<double>(ensemble.n()) * (s + 2.0 * delta);
  int64_t r = static_cast<int64_t>(std::ceil(raw - 1e-12));
  if (r < 1) r = 1;
  if (r > 2 * ensemble.n()) {
    throw std::domain_error("run_hashing: rounds exceed 2n (delta too large for this n)");
  }
  return r;
}

}  // namespace

BitVec ErrorEnsemble::to_bits() const {
  BitVec bits(2 * symbols.size());
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] & 2) bits.set(2 * i, true);      // phase bit k
    if (symbols[i] & 1) bits.set(2 * i + 1, true);  // amplitude bit l
  }
  return bits;
}

std::vector<uint8_t> ErrorEnsemble::symbols_from_bits(const BitVec& bits) {
  std::vector<uint8_t> symbols(bits.size() / 2, 0);
  for (size_t i = 0; i < symbols.size(); ++i) {
    symbols[i] = static_cast<uint8_t>((bits.get(2 * i) << 1) | bits.get(2 * i + 1));
  }
  return symbols;
}

ErrorEnsemble sample_ensemble(const BellDiagonal& source, int64_t n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_ensemble: n must be >= 1");
  Rng rng(seed);
  ErrorEnsemble e;
  e.source = source;
  e.symbols.resize(static_cast<size_t>(n));
  for (auto& s : e.symbols) {
    s = static_cast<uint8_t>(rng.sample_discrete(source.probs()));
  }
  return e;
}

HashingRunResult run_hashing(const ErrorEnsemble& ensemble, double delta, uint64_t seed) {
  if (delta < 0.0) throw std::domain_error("run_hashing: delta must be >= 0");
  const int64_t n = ensemble.n();
  const size_t nbits = static_cast<size_t>(2 * n);
  Rng rng(seed);

  HashingRunResult result;
  result.rounds = round_count(ensemble, delta);

  const BitVec truth = ensemble.to_bits();
  std::vector<BitVec> masks;
  std::vector<uint8_t> outcomes;
  masks.reserve(result.rounds);
  result.parity_rounds.reserve(result.rounds);
  for (int64_t r = 0; r < result.rounds; ++r) {
    BitVec mask = random_nonempty_mask(nbits, rng);
    const int outcome = mask.dot(truth) ? 1 : 0;
    result.parity_rounds.push_back({mask, outcome});
    masks.push_back(std::move(mask));
    outcomes.push_back(static_cast<uint8_t>(outcome));
  }

  // Every string consistent with the parities lies in truth + null(M), so the
  // likely-set/parity intersection is walked through the nullspace coset.
  Gf2System system(std::move(masks), std::move(outcomes));
  if (!system.consistent()) throw std::logic_error("run_hashing: recorded parities inconsistent");
  const std::vector<BitVec> basis = system.nullspace_basis();
  const size_t d = basis.size();

  const LikelyTest likely(ensemble.source, n, delta);
  const bool truth_likely = likely.likely(ensemble.symbols);

  if (n <= kExhaustivePairLimit) {
    // Exhaustive mode: enumerate the full coset (2^d <= 2^{2n} <= 2^26
    // candidates) by Gray code and keep the likely ones.
    BitVec y = truth;
    size_t candidates = 0;
    bool candidate_is_truth = false;
    std::vector<uint8_t> candidate;
    const uint64_t total = uint64_t{1} << d;
    for (uint64_t it = 0;; ++it) {
      const auto symbols = ErrorEnsemble::symbols_from_bits(y);
      if (likely.likely(symbols)) {
        if (++candidates == 1) {
          candidate = symbols;
          candidate_is_truth = (y == truth);
        }
        if (candidates > 1) {
          candidate.clear();
        }
      }
      if (it + 1 >= total) break;
      // Gray-code step: flip the basis vector indexed by the lowest set bit.
      y.xor_with(basis[static_cast<size_t>(std::countr_zero(it + 1))]);
    }
    result.success = candidates == 1 && candidate_is_truth;
    if (candidates == 1) result.decoded_symbols = std::move(candidate);
    if (result.success && !truth_likely) {
      throw std::logic_error("run_hashing: decoder soundness violated");
    }
    return result;
  }

  // Approximate mode: truth must be likely, and no other likely coset member
  // may be found. The search is importance-sampled: free bits are drawn from
  // the source distribution (which concentrates on the likely set) and pivot
  // bits completed through the parity constraints. One-sided error: a missed
  // collision under-reports failures, never the reverse.
  result.approximate = true;
  bool collision = false;
  if (truth_likely && d > 0) {
    for (const BitVec& b : basis) {
      BitVec y = truth;
      y.xor_with(b);
      if (y != truth && likely.likely(ErrorEnsemble::symbols_from_bits(y))) {
        collision = true;
        break;
      }
    }
    for (int s = 0; !collision && s < kCollisionSearchSamples; ++s) {
      BitVec free_bits(d);
      // Free bits lifted from an i.i.d. draw of the source.
      BitVec w(nbits);
      for (int64_t i = 0; i < n; ++i) {
        const auto sym = rng.sample_discrete(ensemble.source.probs());
        if (sym & 2) w.set(2 * i, true);
        if (sym & 1) w.set(2 * i + 1, true);
      }
      const auto& free_cols = system.free_cols();
      for (size_t i = 0; i < d; ++i) free_bits.set(i, w.get(free_cols[i]));
      const BitVec y = system.solve_with_free_bits(free_bits);
      if (y != truth && likely.likely(ErrorEnsemble::symbols_from_bits(y))) {
        collision = true;
      }
    }
  }
  result.success = truth_likely && !collision;
  if (result.success) result.decoded_symbols = ensemble.symbols;
  return result;
}

std::pair<double, double> wilson_interval(int64_t x, int64_t t) {
  if (t <= 0) throw std::invalid_argument("wilson_interval: trials must be positive");
  const double z = 1.959963984540054;  // 97.5th normal percentile
  const double nn = static_cast<double>(t);
  const double p = static_cast<double>(x) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = p + z2 / (2.0 * nn);
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, (center - half) / denom), std::min(1.0, (center + half) / denom)};
}

std::vector<McReport> validate_bound(double f_in, std::span<const int64_t> n_grid,
                                     const DeltaSchedule& schedule, int64_t trials,
                                     uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("validate_bound: trials must be >= 1");
  const BellDiagonal source = BellDiagonal::werner(f_in);
  const double entropy = entropy_bits(source);

  std::vector<McReport> reports;
  reports.reserve(n_grid.size());
  uint64_t stream = 0;
  for (int64_t n : n_grid) {
    McReport rep;
    rep.f_in = f_in;
    rep.n = n;
    rep.delta = schedule.resolve(n, entropy);
    rep.trials = trials;
    rep.analytic_bound = p1_bound(f_in, static_cast<double>(n), rep.delta) +
                         p2_bound(static_cast<double>(n), rep.delta);
    for (int64_t t = 0; t < trials; ++t) {
      Rng trial_rng = Rng::stream(seed, stream++);
      const uint64_t sample_seed = trial_rng.next_u64();
      const uint64_t run_seed = trial_rng.next_u64();
      const auto ensemble = sample_ensemble(source, n, sample_seed);
      const auto run = run_hashing(ensemble, rep.delta, run_seed);
      rep.approximate_decoder = run.approximate;
      if (!run.success) ++rep.failures;
    }
    rep.empirical_p_fail = static_cast<double>(rep.failures) / static_cast<double>(trials);
    std::tie(rep.wilson_low, rep.wilson_high) = wilson_interval(rep.failures, trials);
    reports.push_back(std::move(rep));
  }
  return reports;
}

ChainEstimate simulate_chain(double f_in, int64_t n_links, int64_t n, double delta,
                             NoiseParams resource_noise, int64_t trials, uint64_t seed) {
  if (n_links < 1) throw std::invalid_argument("simulate_chain: n_links must be >= 1");
  if (trials < 1) throw std::invalid_argument("simulate_chain: trials must be >= 1");

  const BellDiagonal eff = effective_input(BellDiagonal::werner(f_in), resource_noise);
  const double f_eff = eff.fidelity();

  ChainEstimate est;
  est.trials = trials;
  est.output_noise_fidelity = effective_input(BellDiagonal::perfect(), resource_noise).fidelity();

  uint64_t stream = 0;
  for (int64_t t = 0; t < trials; ++t) {
    bool all_ok = true;
    for (int64_t link = 0; link < n_links; ++link) {
      Rng link_rng = Rng::stream(seed, stream++);
      const uint64_t sample_seed = link_rng.next_u64();
      const uint64_t run_seed = link_rng.next_u64();
      const auto ensemble = sample_ensemble(eff, n, sample_seed);
      if (!run_hashing(ensemble, delta, run_seed).success) {
        all_ok = false;
        // Remaining links still consume their streams so per-trial seeds stay
        // aligned regardless of where a failure lands.
      }
    }
    if (all_ok) ++est.all_links_succeeded;
  }

  const double success_rate =
      static_cast<double>(est.all_links_succeeded) / static_cast<double>(trials);
  est.empirical_fidelity = success_rate * est.output_noise_fidelity;
  const auto [lo, hi] = wilson_interval(est.all_links_succeeded, trials);
  est.fidelity_ci_low = lo * est.output_noise_fidelity;
  est.fidelity_ci_high = hi * est.output_noise_fidelity;

  const auto bound =
      global_private_fidelity(f_eff, n, DeltaSchedule::fixed(delta), n_links);
  est.analytic_lower = (bound ? bound->f_gp : 0.0) * est.output_noise_fidelity;
  return est;
}

}  // namespace hashrep
