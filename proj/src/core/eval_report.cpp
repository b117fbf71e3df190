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

#include "addrmatch/eval_report.hpp"

#include "addrmatch/error.hpp"
#include "json.hpp"

namespace addrmatch {

using ordered_json = nlohmann::ordered_json;

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  tp += other.tp;
  fp += other.fp;
  tn += other.tn;
  fn += other.fn;
  return *this;
}

EvalReport EvalReport::from_counts(std::string algorithm_name, Split split,
                                   const ConfusionCounts& counts) {
  EvalReport report;
  report.algorithm_name = std::move(algorithm_name);
  report.split = split;
  report.counts = counts;
  const auto ratio = [](std::uint64_t num, std::uint64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  };
  if (counts.tp + counts.fp > 0) {
    report.precision = ratio(counts.tp, counts.tp + counts.fp);
  } else {
    report.precision = 1.0;
    report.precision_defined = false;
  }
  if (counts.tp + counts.fn > 0) {
    report.recall = ratio(counts.tp, counts.tp + counts.fn);
  } else {
    report.recall = 1.0;
    report.recall_defined = false;
  }
  report.accuracy =
      counts.total() > 0 ? ratio(counts.tp + counts.tn, counts.total()) : 0.0;
  return report;
}

namespace {

ordered_json to_json_value(const EvalReport& r) {
  ordered_json j;
  j["algorithm"] = r.algorithm_name;
  j["split"] = split_name(r.split);
  j["tp"] = r.counts.tp;
  j["fp"] = r.counts.fp;
  j["tn"] = r.counts.tn;
  j["fn"] = r.counts.fn;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["accuracy"] = r.accuracy;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["fit_seconds"] = r.fit_seconds;
  j["parallelism"] = r.parallelism;
  j["precision_defined"] = r.precision_defined;
  j["recall_defined"] = r.recall_defined;
  return j;
}

}  // namespace

std::string report_to_json(const EvalReport& report, int indent) {
  return to_json_value(report).dump(indent);
}

EvalReport report_from_json(std::string_view json) {
  try {
    const auto j = ordered_json::parse(json);
    EvalReport r;
    r.algorithm_name = j.at("algorithm").get<std::string>();
    const auto split = parse_split(j.at("split").get<std::string>());
    if (!split) throw IngestionError("report: unknown split");
    r.split = *split;
    r.counts.tp = j.at("tp").get<std::uint64_t>();
    r.counts.fp = j.at("fp").get<std::uint64_t>();
    r.counts.tn = j.at("tn").get<std::uint64_t>();
    r.counts.fn = j.at("fn").get<std::uint64_t>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.accuracy = j.at("accuracy").get<double>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    r.fit_seconds = j.at("fit_seconds").get<double>();
    r.parallelism = j.value("parallelism", 1u);
    r.precision_defined = j.value("precision_defined", true);
    r.recall_defined = j.value("recall_defined", true);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("report: ") + e.what());
  }
}

}  // namespace addrmatch
