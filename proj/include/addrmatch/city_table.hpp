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

#ifndef ADDRMATCH_CITY_TABLE_HPP_
#define ADDRMATCH_CITY_TABLE_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace addrmatch {

struct CityEntry {
  std::string city;
  std::string state;

  bool operator==(const CityEntry&) const = default;
};

// (city, state) rows loaded from a "City,State" CSV. Rows are uppercased and
// whitespace-collapsed on load; states must be two letters.
class CityTable {
 public:
  // Throws IngestionError on a missing file, bad header, malformed row, or
  // an empty table.
  static CityTable load(const std::filesystem::path& path);
  static CityTable parse(std::string_view csv, std::string source);
  static const CityTable& bundled();

  std::span<const CityEntry> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const std::string& source() const { return source_; }

  bool contains(std::string_view city, std::string_view state) const;

 private:
  std::vector<CityEntry> rows_;
  std::unordered_set<std::string> keys_;
  std::string source_;
};

}  // namespace addrmatch

#endif  // ADDRMATCH_CITY_TABLE_HPP_
