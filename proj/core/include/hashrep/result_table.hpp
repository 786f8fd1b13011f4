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

#ifndef HASHREP_RESULT_TABLE_H
#define HASHREP_RESULT_TABLE_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hashrep {

using Cell = std::variant<int64_t, double, std::string>;

/// Column-named result grid with a reproducibility metadata block. Emission
/// is fully deterministic: doubles print with 12 significant digits, so
/// outputs are byte-stable for a given (config, seed).
struct ResultTable {
  std::string command;
  uint64_t seed = 0;
  uint64_t config_hash = 0;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);

  /// Header row plus RFC-4180-quoted records; metadata as leading '#' lines.
  std::string to_csv() const;
  /// {"metadata": {...}, "columns": [...], "rows": [[...]]}.
  std::string to_json() const;

  static std::string format_double(double v);
};

}  // namespace hashrep

#endif
