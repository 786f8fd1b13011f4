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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hashrep/runner.hpp"
#include "hashrep/version.hpp"

namespace {

constexpr const char* kCommands[] = {"bounds-sweep", "yield-sweep", "nto1",
                                     "nmin",         "concat",      "rates",
                                     "compare-1998", "mc-validate", "resource-state"};

int run_command(const std::string& command, const std::string& config_path,
                std::optional<uint64_t> seed, std::optional<std::string> format,
                const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "config error: cannot open '" << config_path << "'\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  hashrep::ParsedConfig cfg;
  try {
    cfg = hashrep::parse_config_text(buffer.str(), command, seed, format);
  } catch (const hashrep::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  hashrep::ResultTable table;
  try {
    table = hashrep::run(cfg);
  } catch (const hashrep::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation error (" << command << "): " << e.what() << "\n";
    return 2;
  }

  const std::string text = cfg.format == "json" ? table.to_json() : table.to_csv();
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "computation error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytics and simulation toolkit for hashing-based quantum repeaters"};
  app.set_version_flag("--version", std::string("hashrep ") + hashrep::kVersion);
  app.require_subcommand(1);

  struct Options {
    std::string config;
    std::optional<uint64_t> seed;
    std::optional<std::string> format;
    std::string out;
  };
  std::vector<std::pair<CLI::App*, Options>> subs;
  subs.reserve(std::size(kCommands));
  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    subs.push_back({sub, {}});
    Options& opts = subs.back().second;
    sub->add_option("--config", opts.config, "Config document (JSON)")->required();
    sub->add_option("--seed", opts.seed, "Override the config's RNG seed");
    sub->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", opts.out, "Output path (default stdout)");
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [sub, opts] : subs) {
    if (sub->parsed()) {
      return run_command(sub->get_name(), opts.config, opts.seed, opts.format, opts.out);
    }
  }
  std::cerr << "config error: no command given\n";
  return 1;
}
