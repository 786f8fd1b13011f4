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

#include "hashrep/scenario_config.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace hashrep {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config error: field '" + field + "': " + what);
}

/// Strict object reader: every key must be consumed exactly once.
class Reader {
 public:
  Reader(const json& obj, std::string scope) : obj_(obj), scope_(std::move(scope)) {
    if (!obj.is_object()) fail(scope_, "expected an object");
  }

  bool has(const std::string& key) {
    return obj_.contains(key);
  }

  const json& require(const std::string& key) {
    if (!obj_.contains(key)) fail(path(key), "missing required field");
    used_.insert(key);
    return obj_.at(key);
  }

  const json* optional(const std::string& key) {
    if (!obj_.contains(key)) return nullptr;
    used_.insert(key);
    return &obj_.at(key);
  }

  double number(const std::string& key, const json& v, double lo, double hi) {
    if (!v.is_number()) fail(path(key), "expected a number");
    const double d = v.get<double>();
    if (d < lo || d > hi) {
      fail(path(key), "value " + std::to_string(d) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    return d;
  }

  int64_t integer(const std::string& key, const json& v, int64_t lo, int64_t hi) {
    if (!v.is_number_integer()) fail(path(key), "expected an integer");
    const int64_t i = v.get<int64_t>();
    if (i < lo || i > hi) {
      fail(path(key), "value " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    return i;
  }

  void finish() {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!used_.contains(it.key())) fail(path(it.key()), "unknown key");
    }
  }

  std::string path(const std::string& key) const {
    return scope_.empty() ? key : scope_ + "." + key;
  }

 private:
  const json& obj_;
  std::string scope_;
  std::set<std::string> used_;
};

std::vector<double> fidelity_list(Reader& r, const std::string& key) {
  const json& v = r.require(key);
  if (!v.is_array() || v.empty()) fail(r.path(key), "expected a non-empty array");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(r.number(key, e, 0.25 + 1e-9, 1.0));
  return out;
}

std::vector<int64_t> n_grid(Reader& r) {
  if (r.has("n_values")) {
    const json& v = r.require("n_values");
    if (!v.is_array() || v.empty()) fail(r.path("n_values"), "expected a non-empty array");
    std::vector<int64_t> out;
    for (const auto& e : v) out.push_back(r.integer("n_values", e, 1, 100000000));
    return out;
  }
  const int64_t from = r.integer("n_from", r.require("n_from"), 1, 100000000);
  const int64_t to = r.integer("n_to", r.require("n_to"), from, 100000000);
  const int64_t step = r.integer("n_step", r.require("n_step"), 1, 100000000);
  std::vector<int64_t> out;
  for (int64_t n = from; n <= to; n += step) out.push_back(n);
  return out;
}

DeltaSchedule schedule_from(Reader& outer, const std::string& key, const json& v) {
  Reader r(v, outer.path(key));
  const json& kind = r.require("kind");
  if (!kind.is_string()) fail(outer.path(key) + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  DeltaSchedule out = DeltaSchedule::power(0.25);
  if (k == "power") {
    out = DeltaSchedule::power(r.number("exponent", r.require("exponent"), 1e-9, 1.0 - 1e-9));
  } else if (k == "fixed") {
    out = DeltaSchedule::fixed(r.number("value", r.require("value"), 0.0, 10.0));
  } else if (k == "n_to_1") {
    out = DeltaSchedule::n_to_1();
  } else {
    fail(outer.path(key) + ".kind", "expected one of power|fixed|n_to_1");
  }
  r.finish();
  return out;
}

std::vector<DeltaSchedule> schedule_list(Reader& r, const std::string& key) {
  const json& v = r.require(key);
  if (!v.is_array() || v.empty()) fail(r.path(key), "expected a non-empty array");
  std::vector<DeltaSchedule> out;
  for (const auto& e : v) out.push_back(schedule_from(r, key, e));
  return out;
}

json schedule_canonical(const DeltaSchedule& s) {
  switch (s.kind()) {
    case DeltaSchedule::Kind::kPower:
      return {{"kind", "power"}, {"exponent", s.parameter()}};
    case DeltaSchedule::Kind::kFixed:
      return {{"kind", "fixed"}, {"value", s.parameter()}};
    case DeltaSchedule::Kind::kNToOne:
      return {{"kind", "n_to_1"}};
  }
  return {};
}

uint64_t fnv1a(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text, const std::string& cli_command,
                               std::optional<uint64_t> seed_override,
                               std::optional<std::string> format_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
  }

  Reader top(doc, "");
  ParsedConfig cfg;

  if (const json* cmd = top.optional("command")) {
    if (!cmd->is_string()) fail("command", "expected a string");
    cfg.command = cmd->get<std::string>();
    if (!cli_command.empty() && cli_command != cfg.command) {
      fail("command", "config says '" + cfg.command + "' but the CLI invoked '" + cli_command +
                          "'");
    }
  } else {
    if (cli_command.empty()) fail("command", "missing required field");
    cfg.command = cli_command;
  }

  if (const json* seed = top.optional("seed")) {
    if (!seed->is_number_unsigned() && !seed->is_number_integer()) {
      fail("seed", "expected an unsigned integer");
    }
    cfg.seed = seed->get<uint64_t>();
  }
  if (seed_override) cfg.seed = *seed_override;

  if (const json* fmt = top.optional("format")) {
    if (!fmt->is_string()) fail("format", "expected a string");
    cfg.format = fmt->get<std::string>();
  }
  if (format_override) cfg.format = *format_override;
  if (cfg.format != "csv" && cfg.format != "json") fail("format", "expected csv or json");

  json canonical;
  canonical["command"] = cfg.command;
  canonical["seed"] = cfg.seed;

  if (cfg.command == "bounds-sweep") {
    BoundsSweepCfg c;
    c.fidelities = fidelity_list(top, "fidelities");
    c.n_values = n_grid(top);
    c.schedules = schedule_list(top, "schedules");
    if (const json* v = top.optional("n_links")) {
      if (!v->is_array() || v->empty()) fail("n_links", "expected a non-empty array");
      c.n_links.clear();
      for (const auto& e : *v) c.n_links.push_back(top.integer("n_links", e, 1, 1000000000));
    }
    if (const json* v = top.optional("ldn")) c.ldn = top.number("ldn", *v, 0.0, 0.5);
    json sch = json::array();
    for (const auto& s : c.schedules) sch.push_back(schedule_canonical(s));
    canonical["fidelities"] = c.fidelities;
    canonical["n_values"] = c.n_values;
    canonical["schedules"] = sch;
    canonical["n_links"] = c.n_links;
    canonical["ldn"] = c.ldn;
    cfg.payload = std::move(c);
  } else if (cfg.command == "yield-sweep") {
    YieldSweepCfg c;
    c.fidelities = fidelity_list(top, "fidelities");
    c.n_values = n_grid(top);
    c.schedules = schedule_list(top, "schedules");
    if (const json* v = top.optional("ldn")) c.ldn = top.number("ldn", *v, 0.0, 0.5);
    json sch = json::array();
    for (const auto& s : c.schedules) sch.push_back(schedule_canonical(s));
    canonical["fidelities"] = c.fidelities;
    canonical["n_values"] = c.n_values;
    canonical["schedules"] = sch;
    canonical["ldn"] = c.ldn;
    cfg.payload = std::move(c);
  } else if (cfg.command == "nto1") {
    NTo1Cfg c;
    c.fidelities = fidelity_list(top, "fidelities");
    c.n_values = n_grid(top);
    canonical["fidelities"] = c.fidelities;
    canonical["n_values"] = c.n_values;
    cfg.payload = std::move(c);
  } else if (cfg.command == "nmin") {
    NMinCfg c;
    c.fidelities = fidelity_list(top, "fidelities");
    if (const json* v = top.optional("n_links")) c.n_links = top.integer("n_links", *v, 1, 1000000000);
    if (const json* v = top.optional("f_target")) c.f_target = top.number("f_target", *v, 0.25, 1.0);
    if (const json* v = top.optional("cap")) c.cap = top.integer("cap", *v, 10, 10000000);
    canonical["fidelities"] = c.fidelities;
    canonical["n_links"] = c.n_links;
    canonical["f_target"] = c.f_target;
    canonical["cap"] = c.cap;
    cfg.payload = std::move(c);
  } else if (cfg.command == "concat") {
    ConcatCfg c;
    c.fidelity = top.number("fidelity", top.require("fidelity"), 0.25 + 1e-9, 1.0);
    const json& blocks = top.require("block_sizes");
    if (!blocks.is_array() || blocks.empty()) fail("block_sizes", "expected a non-empty array");
    for (const auto& e : blocks) c.block_sizes.push_back(top.integer("block_sizes", e, 2, 10000000));
    c.levels = static_cast<int>(top.integer("levels", top.require("levels"), 1, 64));
    canonical["fidelity"] = c.fidelity;
    canonical["block_sizes"] = c.block_sizes;
    canonical["levels"] = c.levels;
    cfg.payload = std::move(c);
  } else if (cfg.command == "rates") {
    RatesCfg c;
    c.l0_km = top.number("l0_km", top.require("l0_km"), 1e-6, 1e6);
    c.n_links = top.integer("n_links", top.require("n_links"), 1, 1000000000);
    c.eta = top.number("eta", top.require("eta"), 1e-9, 1.0);
    if (const json* v = top.optional("t0_s")) c.t0_s = top.number("t0_s", *v, 1e-15, 1e6);
    c.tp_s = top.number("tp_s", top.require("tp_s"), 1e-15, 1e6);
    if (const json* v = top.optional("c_fiber_m_s")) {
      c.c_fiber_m_s = top.number("c_fiber_m_s", *v, 1.0, 3e8);
    }
    c.n = top.integer("n", top.require("n"), 1, 100000000);
    if (const json* v = top.optional("delta")) c.schedule = schedule_from(top, "delta", *v);
    if (const json* v = top.optional("epsilon")) c.epsilon = top.number("epsilon", *v, 0.0, 10.0);
    if (const json* v = top.optional("ldn")) c.ldn = top.number("ldn", *v, 0.0, 0.5);
    c.fidelity = top.number("fidelity", top.require("fidelity"), 0.25 + 1e-9, 1.0);
    if (const json* v = top.optional("timing")) {
      if (!v->is_string()) fail("timing", "expected a string");
      c.timing = v->get<std::string>();
      if (c.timing != "continuous" && c.timing != "single_shot") {
        fail("timing", "expected continuous or single_shot");
      }
    }
    canonical["l0_km"] = c.l0_km;
    canonical["n_links"] = c.n_links;
    canonical["eta"] = c.eta;
    canonical["t0_s"] = c.t0_s;
    canonical["tp_s"] = c.tp_s;
    canonical["c_fiber_m_s"] = c.c_fiber_m_s;
    canonical["n"] = c.n;
    canonical["delta"] = schedule_canonical(c.schedule);
    canonical["epsilon"] = c.epsilon;
    canonical["ldn"] = c.ldn;
    canonical["fidelity"] = c.fidelity;
    canonical["timing"] = c.timing;
    cfg.payload = std::move(c);
  } else if (cfg.command == "compare-1998") {
    Compare1998Cfg c;
    c.fidelity = top.number("fidelity", top.require("fidelity"), 0.25 + 1e-9, 1.0);
    if (const json* v = top.optional("link_exponents")) {
      if (!v->is_array() || v->empty()) fail("link_exponents", "expected a non-empty array");
      c.link_exponents.clear();
      for (const auto& e : *v) {
        c.link_exponents.push_back(static_cast<int>(top.integer("link_exponents", e, 1, 16)));
      }
    }
    if (const json* v = top.optional("ldn")) c.ldn = top.number("ldn", *v, 0.0, 0.5);
    if (const json* v = top.optional("emit")) {
      if (!v->is_string()) fail("emit", "expected a string");
      c.emit = v->get<std::string>();
      if (c.emit != "table" && c.emit != "wf_sweep") fail("emit", "expected table or wf_sweep");
    }
    canonical["fidelity"] = c.fidelity;
    canonical["link_exponents"] = c.link_exponents;
    canonical["ldn"] = c.ldn;
    canonical["emit"] = c.emit;
    cfg.payload = std::move(c);
  } else if (cfg.command == "mc-validate") {
    McValidateCfg c;
    c.fidelities = fidelity_list(top, "fidelities");
    c.n_values = n_grid(top);
    if (const json* v = top.optional("delta")) c.schedule = schedule_from(top, "delta", *v);
    c.trials = top.integer("trials", top.require("trials"), 1, 10000000);
    canonical["fidelities"] = c.fidelities;
    canonical["n_values"] = c.n_values;
    canonical["delta"] = schedule_canonical(c.schedule);
    canonical["trials"] = c.trials;
    cfg.payload = std::move(c);
  } else if (cfg.command == "resource-state") {
    ResourceStateCfg c;
    c.n = static_cast<int>(top.integer("n", top.require("n"), 1, 32));
    const bool has_rounds = top.has("rounds");
    const bool has_random = top.has("random_rounds");
    if (has_rounds == has_random) {
      fail("rounds", "give exactly one of rounds | random_rounds");
    }
    if (has_rounds) {
      const json& rounds = top.require("rounds");
      if (!rounds.is_array()) fail("rounds", "expected an array");
      for (const auto& e : rounds) {
        Reader rr(e, "rounds[]");
        HashingRound round;
        const json& subset = rr.require("subset");
        if (!subset.is_array() || subset.empty()) fail("rounds[].subset", "expected a non-empty array");
        for (const auto& s : subset) {
          round.subset.push_back(static_cast<int>(rr.integer("subset", s, 0, c.n - 1)));
        }
        round.target = static_cast<int>(rr.integer("target", rr.require("target"), 0, c.n - 1));
        rr.finish();
        c.rounds.push_back(std::move(round));
      }
      HashingCircuit probe{c.n, c.rounds};
      try {
        probe.validate();
      } catch (const std::invalid_argument& e) {
        fail("rounds", e.what());
      }
    } else {
      c.random_rounds = static_cast<int>(
          top.integer("random_rounds", top.require("random_rounds"), 0, c.n - 1));
    }
    canonical["n"] = c.n;
    if (has_rounds) {
      json rounds = json::array();
      for (const auto& r : c.rounds) rounds.push_back({{"subset", r.subset}, {"target", r.target}});
      canonical["rounds"] = rounds;
    } else {
      canonical["random_rounds"] = c.random_rounds;
    }
    cfg.payload = std::move(c);
  } else {
    throw ConfigError("config error: unknown command '" + cfg.command + "'");
  }

  top.finish();
  cfg.config_hash = fnv1a(canonical.dump());
  return cfg;
}

}  // namespace hashrep
