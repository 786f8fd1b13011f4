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

#include "hashrep/result_table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "hashrep/version.hpp"

namespace hashrep {

namespace {

std::string hash_hex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  if (const auto* i = std::get_if<int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return ResultTable::format_double(*d);
  return std::get<std::string>(cell);
}

}  // namespace

std::string ResultTable::format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("ResultTable::add_row: cell count != column count");
  }
  rows.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
  std::string out;
  out += "# command=" + command + "\n";
  out += "# seed=" + std::to_string(seed) + "\n";
  out += "# config_hash=" + hash_hex(config_hash) + "\n";
  out += "# version=" + std::string(kVersion) + "\n";
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(columns[c]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(cell_text(row[c]));
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  // Hand-assembled so double formatting stays pinned to 12 significant
  // digits; nlohmann handles only the string escaping.
  const auto jstr = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::string out = "{\n  \"metadata\": {\n";
  out += "    \"command\": " + jstr(command) + ",\n";
  out += "    \"seed\": " + std::to_string(seed) + ",\n";
  out += "    \"config_hash\": " + jstr(hash_hex(config_hash)) + ",\n";
  out += "    \"version\": " + jstr(kVersion) + "\n  },\n";
  out += "  \"columns\": [";
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ", ";
    out += jstr(columns[c]);
  }
  out += "],\n  \"rows\": [";
  for (size_t r = 0; r < rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ", ";
      const Cell& cell = rows[r][c];
      if (const auto* i = std::get_if<int64_t>(&cell)) {
        out += std::to_string(*i);
      } else if (const auto* d = std::get_if<double>(&cell)) {
        const double v = *d;
        if (std::isnan(v) || std::isinf(v)) {
          out += jstr(format_double(v));  // JSON has no inf/nan literals
        } else {
          out += format_double(v);
        }
      } else {
        out += jstr(std::get<std::string>(cell));
      }
    }
    out += "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

}  // namespace hashrep
