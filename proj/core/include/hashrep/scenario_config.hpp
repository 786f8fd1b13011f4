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

#ifndef HASHREP_SCENARIO_CONFIG_H
#define HASHREP_SCENARIO_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hashrep/hashing_bounds.hpp"
#include "hashrep/resource_state.hpp"

namespace hashrep {

/// Schema violation in a config document; reported with the offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundsSweepCfg {
  std::vector<double> fidelities;
  std::vector<int64_t> n_values;
  std::vector<DeltaSchedule> schedules;
  std::vector<int64_t> n_links{100};
  double ldn = 0.0;
};

struct YieldSweepCfg {
  std::vector<double> fidelities;
  std::vector<int64_t> n_values;
  std::vector<DeltaSchedule> schedules;
  double ldn = 0.0;
};

struct NTo1Cfg {
  std::vector<double> fidelities;
  std::vector<int64_t> n_values;
};

struct NMinCfg {
  std::vector<double> fidelities;
  int64_t n_links = 1;
  double f_target = -1.0;  // < 0 means "target = input fidelity"
  int64_t cap = 10000000;
};

struct ConcatCfg {
  double fidelity = 0.0;
  std::vector<int64_t> block_sizes;
  int levels = 1;
};

struct RatesCfg {
  double l0_km = 0.0;
  int64_t n_links = 1;
  double eta = 1.0;
  double t0_s = -1.0;  // < 0 means "derive: one segment crossing, l0 / c_fiber"
  double tp_s = 0.0;
  double c_fiber_m_s = 2e8;
  int64_t n = 0;
  DeltaSchedule schedule = DeltaSchedule::power(0.25);
  double epsilon = -1.0;  // < 0 means n^(-1/4)
  double ldn = 0.0;
  double fidelity = 1.0;
  std::string timing = "continuous";  // or "single_shot"
};

struct Compare1998Cfg {
  double fidelity = 0.0;
  std::vector<int> link_exponents{7, 8, 9, 10, 11, 12, 13};
  double ldn = 0.01;
  std::string emit = "table";  // or "wf_sweep"
};

struct McValidateCfg {
  std::vector<double> fidelities;
  std::vector<int64_t> n_values;
  DeltaSchedule schedule = DeltaSchedule::power(0.25);
  int64_t trials = 1000;
};

struct ResourceStateCfg {
  int n = 0;
  std::vector<HashingRound> rounds;  // explicit circuit...
  int random_rounds = -1;            // ...or this many random rounds (uses seed)
};

using CommandConfig =
    std::variant<BoundsSweepCfg, YieldSweepCfg, NTo1Cfg, NMinCfg, ConcatCfg, RatesCfg,
                 Compare1998Cfg, McValidateCfg, ResourceStateCfg>;

struct ParsedConfig {
  std::string command;
  uint64_t seed = 0;
  std::string format = "csv";  // or "json"
  /// FNV-1a over the canonical (defaults-applied) semantic fields; presentation
  /// options (format, output path) are excluded.
  uint64_t config_hash = 0;
  CommandConfig payload;
};

/// Parses and schema-validates a config document (JSON text). Unknown keys
/// are rejected; all physical fields are range-checked with field-level
/// messages. `cli_command` must match the config's "command" when both are
/// given. Flag overrides replace the config's seed/format before hashing.
ParsedConfig parse_config_text(const std::string& text, const std::string& cli_command,
                               std::optional<uint64_t> seed_override,
                               std::optional<std::string> format_override);

}  // namespace hashrep

#endif
