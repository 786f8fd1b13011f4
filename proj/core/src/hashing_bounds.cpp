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

#include "hashrep/hashing_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hashrep/bell_state.hpp"

namespace hashrep {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

/// ln of the p1 bound; -inf means the bound is exactly 0 (F = 1, delta > 0).
double log_p1_bound(const BennettTerms& t, double n, double delta) {
  if (delta < 0.0) throw std::domain_error("p1_bound: delta must be >= 0");
  if (n < 1.0) throw std::domain_error("p1_bound: n must be >= 1");
  if (delta == 0.0) return std::log(2.0);  // bracket vanishes
  if (!t.scale_finite || t.variance == 0.0) {
    // Deterministic ensemble: the string never leaves the likely set.
    return -kInf;
  }
  const double g = t.ratio;
  const double bracket = (g + delta) * std::log1p(delta / g) - delta;
  return std::log(2.0) - (n / t.scale) * bracket;
}

}  // namespace

BennettTerms bennett_terms(double fidelity) {
  if (!(fidelity > 0.25) || fidelity > 1.0) {
    throw std::domain_error("bennett_terms: fidelity must lie in (0.25, 1]");
  }
  BennettTerms t;
  if (fidelity == 1.0) {
    t.entropy = 0.0;
    t.variance = 0.0;
    t.ratio = 0.0;
    t.scale = kInf;
    t.scale_finite = false;
    return t;
  }
  const double err = (1.0 - fidelity) / 3.0;
  const double lf = std::log2(fidelity);
  const double le = std::log2(err);
  t.entropy = -fidelity * lf - (1.0 - fidelity) * le;
  t.scale = std::abs(le) + t.entropy;
  t.variance = fidelity * lf * lf + (1.0 - fidelity) * le * le - t.entropy * t.entropy;
  if (t.variance < 0.0) t.variance = 0.0;  // guards rounding at F ~ 1
  t.ratio = t.variance / t.scale;
  return t;
}

double p1_bound(double fidelity, double n, double delta) {
  const double lp = log_p1_bound(bennett_terms(fidelity), n, delta);
  return lp == -kInf ? 0.0 : std::exp(lp);
}

double p2_bound(double n, double delta) {
  if (delta < 0.0) throw std::domain_error("p2_bound: delta must be >= 0");
  if (n < 1.0) throw std::domain_error("p2_bound: n must be >= 1");
  return std::exp2(-n * delta);
}

double log_failure_bound(double fidelity, double n, double delta) {
  const double lp1 = log_p1_bound(bennett_terms(fidelity), n, delta);
  const double lp2 = -n * delta * kLn2;
  const double hi = std::max(lp1, lp2);
  if (hi == -kInf) return -kInf;
  return hi + std::log1p(std::exp(std::min(lp1, lp2) - hi));
}

double hashing_threshold() {
  double lo = 0.75, hi = 1.0 - 1e-12;
  // S is decreasing in F on this interval, with S(lo) > 1 > S(hi).
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    (werner_entropy(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DeltaSchedule DeltaSchedule::power(double exponent) {
  if (!(exponent > 0.0) || !(exponent < 1.0)) {
    throw std::invalid_argument("DeltaSchedule::power: exponent must lie in (0, 1)");
  }
  return DeltaSchedule(Kind::kPower, exponent);
}

DeltaSchedule DeltaSchedule::fixed(double value) {
  if (value < 0.0) throw std::invalid_argument("DeltaSchedule::fixed: delta must be >= 0");
  return DeltaSchedule(Kind::kFixed, value);
}

DeltaSchedule DeltaSchedule::n_to_1() { return DeltaSchedule(Kind::kNToOne, 0.0); }

double DeltaSchedule::resolve(int64_t n, double entropy) const {
  if (n < 1) throw std::invalid_argument("DeltaSchedule::resolve: n must be >= 1");
  switch (kind_) {
    case Kind::kPower:
      return std::pow(static_cast<double>(n), -param_);
    case Kind::kFixed:
      return param_;
    case Kind::kNToOne:
      return 0.5 * ((static_cast<double>(n) - 1.0) / static_cast<double>(n) - entropy);
  }
  throw std::logic_error("DeltaSchedule::resolve: bad kind");
}

std::string DeltaSchedule::describe() const {
  switch (kind_) {
    case Kind::kPower:
      return "n^-" + std::to_string(param_);
    case Kind::kFixed:
      return "fixed " + std::to_string(param_);
    case Kind::kNToOne:
      return "n_to_1";
  }
  return "?";
}

std::optional<HashingBound> global_private_fidelity(double f_in, int64_t n,
                                                    const DeltaSchedule& schedule,
                                                    int64_t n_links) {
  if (n < 1) throw std::domain_error("global_private_fidelity: n must be >= 1");
  if (n_links < 1) throw std::domain_error("global_private_fidelity: n_links must be >= 1");
  HashingBound b;
  b.f_in = f_in;
  b.n = n;
  b.n_links = n_links;
  b.terms = bennett_terms(f_in);
  b.delta = schedule.resolve(n, b.terms.entropy);
  if (b.delta < 0.0) return std::nullopt;  // n->1 schedule, n too small

  b.p1 = p1_bound(f_in, static_cast<double>(n), b.delta);
  b.p2 = p2_bound(static_cast<double>(n), b.delta);
  const double p_fail = b.p1 + b.p2;
  if (p_fail >= 1.0) {
    b.f_gp = 0.0;  // vacuous bound
  } else {
    b.f_gp = clamp01(std::exp(static_cast<double>(n_links) * std::log1p(-p_fail)));
  }
  b.f_gp_linear = std::max(0.0, 1.0 - static_cast<double>(n_links) * p_fail);
  b.yield_c = 1.0 - b.terms.entropy - 2.0 * b.delta;
  b.m = b.yield_c > 0.0
            ? static_cast<int64_t>(std::floor(static_cast<double>(n) * b.yield_c + 1e-9))
            : 0;
  return b;
}

YieldOverhead yield_and_overhead(double f_in, double delta, ChannelMode mode, int64_t n) {
  if (delta < 0.0) throw std::domain_error("yield_and_overhead: delta must be >= 0");
  const double s = bennett_terms(f_in).entropy;
  const double c = 1.0 - s - 2.0 * delta;
  YieldOverhead out;
  out.yield_c = std::max(0.0, c);
  if (c <= 0.0) {
    out.overhead = kInf;
    out.overhead_finite = false;
    return out;
  }
  switch (mode) {
    case ChannelMode::kManyChannel:
      out.overhead = 4.0 / c;
      break;
    case ChannelMode::kSingleChannel:
      if (n < 1) throw std::domain_error("yield_and_overhead: single-channel overhead needs n");
      out.overhead = 2.0 / c + 1.0 / static_cast<double>(n);
      break;
  }
  out.overhead_finite = true;
  return out;
}

std::optional<NToOneBound> n_to_1_fidelity(double f_in, int64_t n) {
  if (n < 2) return std::nullopt;
  const BennettTerms t = bennett_terms(f_in);
  const double delta = DeltaSchedule::n_to_1().resolve(n, t.entropy);
  if (delta < 0.0) return std::nullopt;
  NToOneBound out;
  out.delta = delta;
  out.p1 = p1_bound(f_in, static_cast<double>(n), delta);
  out.p2 = p2_bound(static_cast<double>(n), delta);
  out.fidelity = clamp01(1.0 - out.p1 - out.p2);
  return out;
}

FitParams fit_alpha_beta(double f_in, int64_t n_from, int64_t n_to, int64_t n_step) {
  if (n_from < 2 || n_to <= n_from) {
    throw std::invalid_argument("fit_alpha_beta: bad n range");
  }
  if (n_step <= 0) n_step = std::max<int64_t>(1, (n_to - n_from) / 40);

  const double entropy = bennett_terms(f_in).entropy;
  // ln(1 - F'(n)) = ln(p1 + p2), evaluated in log space so the fit range can
  // extend far below double underflow.
  std::vector<double> xs, ys;
  for (int64_t n = n_from; n <= n_to; n += n_step) {
    const double delta =
        0.5 * ((static_cast<double>(n) - 1.0) / static_cast<double>(n) - entropy);
    if (delta < 0.0) continue;
    xs.push_back(static_cast<double>(n));
    ys.push_back(log_failure_bound(f_in, static_cast<double>(n), delta));
  }
  if (xs.size() < 3) throw std::invalid_argument("fit_alpha_beta: range not distillable");

  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / m;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double fit = intercept + slope * xs[i];
    ss_res += (ys[i] - fit) * (ys[i] - fit);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }

  FitParams out;
  out.beta = -slope;
  // Inflate alpha so 1 - alpha exp(-beta n) <= F'(n) at every grid point,
  // i.e. ln(alpha) - beta n >= ln(1 - F'(n)).
  double log_alpha = intercept;
  for (size_t i = 0; i < xs.size(); ++i) {
    log_alpha = std::max(log_alpha, ys[i] + out.beta * xs[i]);
  }
  out.alpha = std::exp(log_alpha);
  out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  out.good_fit = out.r_squared >= 0.99 && out.beta > 0.0 && out.alpha > 0.0;
  return out;
}

NMinResult n_min_search(double f_in, int64_t n_links, double f_target, int64_t cap) {
  if (n_links < 1) throw std::domain_error("n_min_search: n_links must be >= 1");
  NMinResult out;

  const auto reaches = [&](int64_t n) {
    const auto b = n_to_1_fidelity(f_in, n);
    if (!b) return false;
    return 1.0 - static_cast<double>(n_links) * (1.0 - b->fidelity) >= f_target;
  };

  // Exponential bracketing, then binary search for the boundary.
  int64_t hi = 2;
  while (hi <= cap && !reaches(hi)) hi *= 2;
  if (hi > cap) {
    // One last look at the cap itself before declaring it unreachable.
    if (!reaches(cap)) return out;
    hi = cap;
  }
  int64_t lo = hi / 2 < 2 ? 2 : hi / 2;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (reaches(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  // The predicate is monotone except possibly right at the onset; walk back.
  while (hi > 2 && reaches(hi - 1)) --hi;

  out.reachable = true;
  out.n_min = hi;

  // Fit-based estimate over a window around the found minimum.
  const int64_t fit_lo = std::max<int64_t>(hi, 8);
  const int64_t fit_hi = fit_lo * 3;
  out.fit = fit_alpha_beta(f_in, fit_lo, fit_hi);
  if (out.fit.beta > 0.0) {
    out.fit_estimate =
        std::log(out.fit.alpha * static_cast<double>(n_links) / (1.0 - f_target)) /
        out.fit.beta;
  }
  return out;
}

ConcatResult concatenated_n_to_1(double f_in, int64_t block_size, int levels) {
  if (levels < 1) throw std::invalid_argument("concatenated_n_to_1: levels must be >= 1");
  ConcatResult out;
  double f = f_in;
  double total = 1.0;
  for (int k = 1; k <= levels; ++k) {
    const auto b = n_to_1_fidelity(f, block_size);
    if (!b) {
      if (k == 1) out.feasible = false;
      out.stalled = true;
      return out;
    }
    total *= static_cast<double>(block_size);
    if (b->fidelity <= f) {
      out.stalled = true;
      return out;
    }
    f = b->fidelity;
    out.levels.push_back({k, f, total});
  }
  return out;
}

}  // namespace hashrep
