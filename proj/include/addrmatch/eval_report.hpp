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

#ifndef ADDRMATCH_EVAL_REPORT_HPP_
#define ADDRMATCH_EVAL_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "addrmatch/record.hpp"

namespace addrmatch {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& other);
  bool operator==(const ConfusionCounts&) const = default;
};

// Metrics of one algorithm on one split. Precision (recall) with a zero
// denominator is reported as 1.0 and the corresponding *_defined flag is
// cleared.
struct EvalReport {
  std::string algorithm_name;
  Split split = Split::kTest;
  ConfusionCounts counts;
  double precision = 1.0;
  double recall = 1.0;
  double accuracy = 0.0;
  bool precision_defined = true;
  bool recall_defined = true;
  double elapsed_seconds = 0.0;
  double fit_seconds = 0.0;
  unsigned parallelism = 1;

  static EvalReport from_counts(std::string algorithm_name, Split split,
                                const ConfusionCounts& counts);

  bool operator==(const EvalReport&) const = default;
};

std::string report_to_json(const EvalReport& report, int indent = -1);
EvalReport report_from_json(std::string_view json);

}  // namespace addrmatch

#endif  // ADDRMATCH_EVAL_REPORT_HPP_
