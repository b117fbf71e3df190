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

#ifndef ADDRMATCH_DATASET_HPP_
#define ADDRMATCH_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "addrmatch/record.hpp"

namespace addrmatch {

// Snapshot of the generator settings that produced a dataset.
struct GeneratorSnapshot {
  std::uint64_t n_base = 0;
  std::uint64_t seed = 0;
  std::string city_table_source;
  double train_ratio = 0.8;
  double valid_ratio = 0.1;
  double test_ratio = 0.1;
};

struct Dataset {
  std::vector<LabeledPair> pairs;
  std::uint64_t seed = 0;
  GeneratorSnapshot provenance;

  std::vector<LabeledPair> split(Split which) const;
  std::size_t count(Split which) const;
  std::size_t count_label(int label) const;
};

// JSON Lines, one {"a1","a2","label","split"} object per line in that key
// order, '\n' terminated.
std::string pair_to_jsonl(const LabeledPair& pair);
void write_jsonl(const Dataset& dataset, std::ostream& out);
void save_jsonl(const Dataset& dataset, const std::filesystem::path& path);

// Throws IngestionError naming the offending line on malformed input.
Dataset read_jsonl(std::istream& in);
Dataset load_jsonl(const std::filesystem::path& path);

}  // namespace addrmatch

#endif  // ADDRMATCH_DATASET_HPP_
