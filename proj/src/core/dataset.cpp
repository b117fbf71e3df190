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

#include "addrmatch/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "addrmatch/error.hpp"
#include "json.hpp"

namespace addrmatch {

using ordered_json = nlohmann::ordered_json;

std::vector<LabeledPair> Dataset::split(Split which) const {
  std::vector<LabeledPair> out;
  for (const LabeledPair& pair : pairs) {
    if (pair.split == which) out.push_back(pair);
  }
  return out;
}

std::size_t Dataset::count(Split which) const {
  std::size_t n = 0;
  for (const LabeledPair& pair : pairs) n += pair.split == which;
  return n;
}

std::size_t Dataset::count_label(int label) const {
  std::size_t n = 0;
  for (const LabeledPair& pair : pairs) n += pair.label == label;
  return n;
}

std::string pair_to_jsonl(const LabeledPair& pair) {
  ordered_json j;
  j["a1"] = pair.a1;
  j["a2"] = pair.a2;
  j["label"] = pair.label;
  j["split"] = split_name(pair.split);
  return j.dump() + "\n";
}

void write_jsonl(const Dataset& dataset, std::ostream& out) {
  for (const LabeledPair& pair : dataset.pairs) out << pair_to_jsonl(pair);
}

void save_jsonl(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IngestionError("cannot open " + path.string() + " for writing");
  write_jsonl(dataset, out);
  out.flush();
  if (!out) throw IngestionError("failed writing " + path.string());
}

namespace {

LabeledPair parse_line(const std::string& line, std::size_t line_no) {
  auto fail = [&](const std::string& what) {
    return IngestionError("dataset line " + std::to_string(line_no) + ": " +
                          what);
  };
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw fail(e.what());
  }
  if (!j.is_object()) throw fail("expected a JSON object");
  LabeledPair pair;
  try {
    pair.a1 = j.at("a1").get<std::string>();
    pair.a2 = j.at("a2").get<std::string>();
    pair.label = j.at("label").get<int>();
    const auto split = parse_split(j.at("split").get<std::string>());
    if (!split) throw fail("split must be train, valid or test");
    pair.split = *split;
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
  try {
    validate_pair(pair);
  } catch (const InvalidInputError& e) {
    throw fail(e.what());
  }
  return pair;
}

}  // namespace

Dataset read_jsonl(std::istream& in) {
  Dataset dataset;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    dataset.pairs.push_back(parse_line(line, line_no));
  }
  return dataset;
}

Dataset load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open dataset " + path.string());
  Dataset dataset = read_jsonl(in);
  if (dataset.pairs.empty()) {
    throw IngestionError("dataset " + path.string() + " is empty");
  }
  return dataset;
}

}  // namespace addrmatch
