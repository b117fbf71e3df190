// Copyright 2026 The addrmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "addrmatch/city_table.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "addrmatch/bundled_data.hpp"
#include "addrmatch/error.hpp"

namespace addrmatch {

namespace {

// Uppercases and collapses internal whitespace runs; trims both ends.
std::string clean_cell(std::string_view cell) {
  std::string out;
  bool pending_space = false;
  for (char c : cell) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string key_of(std::string_view city, std::string_view state) {
  std::string key(city);
  key.push_back('\t');
  key.append(state);
  return key;
}

}  // namespace

CityTable CityTable::parse(std::string_view csv, std::string source) {
  CityTable table;
  table.source_ = std::move(source);
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string_view::npos) eol = csv.size();
    std::string_view line = csv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (clean_cell(line).empty()) continue;
    const auto fail = [&](const std::string& what) {
      return IngestionError(table.source_ + ":" + std::to_string(line_no) +
                            ": " + what);
    };
    if (!saw_header) {
      if (clean_cell(line) != "CITY,STATE") {
        throw fail("expected header \"City,State\"");
      }
      saw_header = true;
      continue;
    }
    const std::size_t comma = line.rfind(',');
    if (comma == std::string_view::npos) throw fail("expected City,State");
    CityEntry entry{clean_cell(line.substr(0, comma)),
                    clean_cell(line.substr(comma + 1))};
    if (entry.city.empty()) throw fail("empty city");
    if (entry.state.size() != 2 ||
        !std::isalpha(static_cast<unsigned char>(entry.state[0])) ||
        !std::isalpha(static_cast<unsigned char>(entry.state[1]))) {
      throw fail("state must be a two-letter code");
    }
    if (table.keys_.insert(key_of(entry.city, entry.state)).second) {
      table.rows_.push_back(std::move(entry));
    }
  }
  if (!saw_header) throw IngestionError(table.source_ + ": missing header");
  if (table.rows_.empty()) throw IngestionError(table.source_ + ": no rows");
  return table;
}

CityTable CityTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open city table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const CityTable& CityTable::bundled() {
  static const CityTable table = parse(bundled_city_csv(), "<bundled>");
  return table;
}

bool CityTable::contains(std::string_view city, std::string_view state) const {
  return keys_.contains(key_of(clean_cell(city), clean_cell(state)));
}

}  // namespace addrmatch
