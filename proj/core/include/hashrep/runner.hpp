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

#ifndef HASHREP_RUNNER_H
#define HASHREP_RUNNER_H

#include <stdexcept>

#include "hashrep/result_table.hpp"
#include "hashrep/scenario_config.hpp"

namespace hashrep {

/// Failure while computing a validated config (distinct exit code from
/// schema errors).
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Executes one command; the result is a pure function of (config, seed).
ResultTable run(const ParsedConfig& config);

}  // namespace hashrep

#endif
