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

#include "hashrep/runner.hpp"

#include <cmath>
#include <string>

#include "hashrep/bell_state.hpp"
#include "hashrep/mc_hashing.hpp"
#include "hashrep/rates.hpp"
#include "hashrep/recurrence.hpp"
#include "hashrep/rng.hpp"

namespace hashrep {

namespace {

double readout_fidelity(NoiseParams noise) {
  return effective_input(BellDiagonal::perfect(), noise).fidelity();
}

ResultTable run_bounds_sweep(const ParsedConfig& cfg, const BoundsSweepCfg& c) {
  ResultTable t;
  t.columns = {"f_in", "ldn",  "schedule", "n_links", "n",     "delta",
               "f_eff", "entropy", "p1",    "p2",      "f_gp",  "f_gp_linear",
               "yield", "m",   "f_out"};
  const NoiseParams noise = NoiseParams::from_error_rate(c.ldn);
  const double out_factor = readout_fidelity(noise);
  for (double f : c.fidelities) {
    const double f_eff = effective_input(BellDiagonal::werner(f), noise).fidelity();
    for (const auto& schedule : c.schedules) {
      for (int64_t links : c.n_links) {
        for (int64_t n : c.n_values) {
          const auto b = global_private_fidelity(f_eff, n, schedule, links);
          if (!b) continue;  // n->1 schedule with n below the distillable size
          t.add_row({f, c.ldn, schedule.describe(), links, n, b->delta, f_eff,
                     b->terms.entropy, b->p1, b->p2, b->f_gp, b->f_gp_linear, b->yield_c,
                     b->m, b->f_gp * out_factor});
        }
      }
    }
  }
  return t;
}

ResultTable run_yield_sweep(const ParsedConfig& cfg, const YieldSweepCfg& c) {
  ResultTable t;
  t.columns = {"f_in", "ldn", "schedule", "n", "delta", "f_eff", "yield", "overhead_many",
               "overhead_single"};
  const NoiseParams noise = NoiseParams::from_error_rate(c.ldn);
  for (double f : c.fidelities) {
    const double f_eff = effective_input(BellDiagonal::werner(f), noise).fidelity();
    const double entropy = bennett_terms(f_eff).entropy;
    for (const auto& schedule : c.schedules) {
      for (int64_t n : c.n_values) {
        const double delta = schedule.resolve(n, entropy);
        if (delta < 0.0) continue;
        const auto many = yield_and_overhead(f_eff, delta, ChannelMode::kManyChannel);
        const auto single = yield_and_overhead(f_eff, delta, ChannelMode::kSingleChannel, n);
        t.add_row({f, c.ldn, schedule.describe(), n, delta, f_eff, many.yield_c, many.overhead,
                   single.overhead});
      }
    }
  }
  return t;
}

ResultTable run_nto1(const ParsedConfig& cfg, const NTo1Cfg& c) {
  ResultTable t;
  t.columns = {"f_in", "n", "delta", "fidelity_bound", "p1", "p2", "status"};
  for (double f : c.fidelities) {
    for (int64_t n : c.n_values) {
      const auto b = n_to_1_fidelity(f, n);
      if (b) {
        t.add_row({f, n, b->delta, b->fidelity, b->p1, b->p2, std::string("ok")});
      } else {
        t.add_row({f, n, 0.0, 0.0, 0.0, 0.0, std::string("n_too_small")});
      }
    }
  }
  return t;
}

ResultTable run_nmin(const ParsedConfig& cfg, const NMinCfg& c) {
  ResultTable t;
  t.columns = {"f_in", "n_links", "f_target", "reachable", "n_min",
               "fit_alpha", "fit_beta", "fit_r_squared", "fit_estimate"};
  for (double f : c.fidelities) {
    const double target = c.f_target > 0.0 ? c.f_target : f;
    const auto res = n_min_search(f, c.n_links, target, c.cap);
    t.add_row({f, c.n_links, target, std::string(res.reachable ? "yes" : "unreachable"),
               res.n_min, res.fit.alpha, res.fit.beta, res.fit.r_squared, res.fit_estimate});
  }
  return t;
}

ResultTable run_concat(const ParsedConfig& cfg, const ConcatCfg& c) {
  ResultTable t;
  t.columns = {"f_in", "block_size", "level", "fidelity", "total_pairs",
               "direct_nto1_fidelity", "status"};
  for (int64_t block : c.block_sizes) {
    const auto res = concatenated_n_to_1(c.fidelity, block, c.levels);
    for (const auto& level : res.levels) {
      // Direct n->1 on the same total resources, for the comparison curves.
      const double n_total = level.total_pairs;
      const double entropy = bennett_terms(c.fidelity).entropy;
      const double delta = 0.5 * ((n_total - 1.0) / n_total - entropy);
      double direct = 0.0;
      if (delta >= 0.0) {
        direct = std::max(
            0.0, 1.0 - std::exp(log_failure_bound(c.fidelity, n_total, delta)));
      }
      t.add_row({c.fidelity, block, static_cast<int64_t>(level.level), level.fidelity,
                 level.total_pairs, direct, std::string("ok")});
    }
    if (res.stalled) {
      t.add_row({c.fidelity, block, static_cast<int64_t>(res.levels.size() + 1), 0.0, 0.0, 0.0,
                 std::string(res.feasible ? "stalled" : "infeasible")});
    }
  }
  return t;
}

ResultTable run_rates(const ParsedConfig& cfg, const RatesCfg& c) {
  RepeaterScenario s;
  s.segment_length_m = c.l0_km * 1000.0;
  s.n_links = c.n_links;
  s.total_length_m = s.segment_length_m * static_cast<double>(c.n_links);
  s.eta = c.eta;
  s.fiber_speed_m_s = c.c_fiber_m_s;
  s.t0_s = c.t0_s > 0.0 ? c.t0_s : s.segment_length_m / s.fiber_speed_m_s;
  s.tp_s = c.tp_s;
  s.n_pairs = c.n;
  s.schedule = c.schedule;
  s.epsilon = c.epsilon;
  s.resource_noise = NoiseParams::from_error_rate(c.ldn);
  s.f_in = c.fidelity;

  RateReport rep;
  try {
    rep = c.timing == "single_shot" ? rate_single_shot(s) : rate_continuous(s);
  } catch (const ZeroYieldError& e) {
    throw ComputationError(e.what());
  }
  const auto mem_mid = memory_requirement(s, StationRole::kIntermediate);
  const auto mem_end = memory_requirement(s, StationRole::kEndStation);

  ResultTable t;
  t.columns = {"timing", "l0_km", "n_links", "eta", "t0_s", "tp_s", "n", "epsilon",
               "ldn", "f_in", "f_eff", "yield", "rate_per_channel_hz",
               "rate_single_channel_hz", "n_channels", "rate_absolute_hz", "t_c_s",
               "overhead_many", "overhead_single", "success_prob_all_links",
               "mem_intermediate_qubits", "mem_intermediate_storage_s", "mem_end_qubits",
               "mem_end_storage_s", "mem_end_storage_flagged"};
  t.add_row({c.timing, c.l0_km, c.n_links, c.eta, s.t0_s, s.tp_s, c.n, s.resolved_epsilon(),
             c.ldn, c.fidelity, rep.effective_fidelity, rep.yield_c, rep.rate_per_channel_hz,
             rep.rate_single_channel_hz, rep.n_channels, rep.rate_absolute_hz, rep.t_c_s,
             rep.overhead_many, rep.overhead_single, rep.success_prob_all_links,
             mem_mid.total_qubits(), mem_mid.storage_time_s, mem_end.total_qubits(),
             mem_end.storage_time_s,
             std::string(mem_end.exceeds_earthbound_scale ? "yes" : "no")});
  return t;
}

/// Comparison-table convention: M elementary pairs per segment, creation and
/// processing times neglected, rates in units of t_segment^(-1). The one-way
/// scheme distributes c(n) * n pairs in N t_segment with n = M; the nested
/// scheme distributes one pair in time * M.
ResultTable run_compare_1998(const ParsedConfig& cfg, const Compare1998Cfg& c) {
  const NoiseParams noise = NoiseParams::from_error_rate(c.ldn);
  const double f_eff = effective_input(BellDiagonal::werner(c.fidelity), noise).fidelity();
  const double entropy = bennett_terms(f_eff).entropy;
  const double out_factor = readout_fidelity(noise);

  if (c.emit == "wf_sweep") {
    ResultTable t;
    t.columns = {"links", "f_work", "feasible", "pairs", "pairs_best_case", "time", "rate",
                 "f_out"};
    for (int k : c.link_exponents) {
      const auto opt = optimize_working_fidelity(c.fidelity, k, noise);
      if (!opt) throw ComputationError("compare-1998: no feasible working fidelity");
      for (const auto& pt : opt->sweep) {
        t.add_row({static_cast<int64_t>(1) << k, pt.f_work,
                   std::string(pt.feasible ? "yes" : "no"), pt.pairs, pt.pairs_best_case,
                   pt.time, pt.rate, pt.f_out});
      }
    }
    return t;
  }

  std::vector<double> rate_1998, rate_2017, fout_1998, fout_2017;
  for (int k : c.link_exponents) {
    const int64_t links = int64_t{1} << k;
    const auto opt = optimize_working_fidelity(c.fidelity, k, noise);
    if (!opt) throw ComputationError("compare-1998: no feasible working fidelity");
    rate_1998.push_back(opt->best.rate);
    fout_1998.push_back(opt->best.f_out);

    // The one-way scheme gets the same per-segment resources n = M.
    const double min_n = std::pow(2.0 / (1.0 - entropy), 4.0);
    const int64_t n = std::max<int64_t>(static_cast<int64_t>(std::ceil(min_n)) + 1,
                                        static_cast<int64_t>(std::llround(opt->best.pairs)));
    const DeltaSchedule sched = DeltaSchedule::power(0.25);
    const auto bound = global_private_fidelity(f_eff, n, sched, links);
    if (!bound) throw ComputationError("compare-1998: bound unavailable");
    rate_2017.push_back(bound->yield_c / static_cast<double>(links));
    fout_2017.push_back(bound->f_gp * out_factor);
  }

  ResultTable t;
  t.columns = {"quantity"};
  for (int k : c.link_exponents) t.columns.push_back("2^" + std::to_string(k));
  const auto add = [&](const std::string& name, const std::vector<double>& vals) {
    std::vector<Cell> row{name};
    for (double v : vals) row.push_back(v);
    t.add_row(std::move(row));
  };
  add("rate_1998", rate_1998);
  add("rate_2017", rate_2017);
  add("f_out_1998", fout_1998);
  add("f_out_2017", fout_2017);
  return t;
}

ResultTable run_mc_validate(const ParsedConfig& cfg, const McValidateCfg& c) {
  ResultTable t;
  t.columns = {"f_in", "n", "delta", "trials", "failures", "empirical_p_fail", "wilson_low",
               "wilson_high", "analytic_bound", "decoder", "dominance"};
  for (double f : c.fidelities) {
    const auto reports = validate_bound(f, c.n_values, c.schedule, c.trials, cfg.seed);
    for (const auto& rep : reports) {
      t.add_row({rep.f_in, rep.n, rep.delta, rep.trials, rep.failures, rep.empirical_p_fail,
                 rep.wilson_low, rep.wilson_high, rep.analytic_bound,
                 std::string(rep.approximate_decoder ? "approximate" : "exhaustive"),
                 std::string(rep.analytic_bound >= 1.0 ? "vacuous"
                             : rep.dominance_holds()    ? "holds"
                                                        : "violated")});
    }
  }
  return t;
}

ResultTable run_resource_state(const ParsedConfig& cfg, const ResourceStateCfg& c) {
  HashingCircuit circuit;
  circuit.n = c.n;
  if (c.random_rounds >= 0) {
    Rng rng(cfg.seed);
    circuit = random_circuit(c.n, c.random_rounds, rng);
  } else {
    circuit.rounds = c.rounds;
    circuit.validate();
  }
  const GraphResource resource = jamiolkowski_resource(circuit);

  ResultTable t;
  t.columns = {"qubit", "io", "local_clifford", "x_image", "z_image", "neighbors"};
  const auto describe = [](const SingleQubitClifford::SignedPauli& p) {
    std::string s = p.neg ? "-" : "+";
    s += p.x && p.z ? "Y" : (p.x ? "X" : "Z");
    return s;
  };
  for (size_t q = 0; q < resource.num_qubits(); ++q) {
    std::string neighbors;
    for (size_t j = 0; j < resource.num_qubits(); ++j) {
      if (resource.adjacency[q].get(j)) {
        if (!neighbors.empty()) neighbors += ';';
        neighbors += std::to_string(j);
      }
    }
    t.add_row({static_cast<int64_t>(q),
               std::string(resource.io_labels[q] == IoLabel::kInput ? "input" : "output"),
               resource.local_cliffords[q].word(), describe(resource.local_cliffords[q].x_image()),
               describe(resource.local_cliffords[q].z_image()), neighbors});
  }
  return t;
}

}  // namespace

ResultTable run(const ParsedConfig& config) {
  ResultTable t = std::visit(
      [&](const auto& payload) -> ResultTable {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, BoundsSweepCfg>) {
          return run_bounds_sweep(config, payload);
        } else if constexpr (std::is_same_v<T, YieldSweepCfg>) {
          return run_yield_sweep(config, payload);
        } else if constexpr (std::is_same_v<T, NTo1Cfg>) {
          return run_nto1(config, payload);
        } else if constexpr (std::is_same_v<T, NMinCfg>) {
          return run_nmin(config, payload);
        } else if constexpr (std::is_same_v<T, ConcatCfg>) {
          return run_concat(config, payload);
        } else if constexpr (std::is_same_v<T, RatesCfg>) {
          return run_rates(config, payload);
        } else if constexpr (std::is_same_v<T, Compare1998Cfg>) {
          return run_compare_1998(config, payload);
        } else if constexpr (std::is_same_v<T, McValidateCfg>) {
          return run_mc_validate(config, payload);
        } else {
          return run_resource_state(config, payload);
        }
      },
      config.payload);
  t.command = config.command;
  t.seed = config.seed;
  t.config_hash = config.config_hash;
  return t;
}

}  // namespace hashrep
