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

#ifndef ADDRMATCH_EVALUATION_HPP_
#define ADDRMATCH_EVALUATION_HPP_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addrmatch/algorithm_config.hpp"
#include "addrmatch/dataset.hpp"
#include "addrmatch/eval_report.hpp"
#include "addrmatch/pipeline.hpp"

namespace addrmatch {

using PairPredicate =
    std::function<bool(std::string_view a1, std::string_view a2)>;

// Runs `predict` over `pairs` and tallies the confusion counts. Wall time is
// measured around the prediction loop only. With parallelism > 1 the pairs
// are split into contiguous chunks evaluated on separate threads; counts are
// merged, so results do not depend on the thread count. Throws
// InvalidInputError for an empty pair list.
EvalReport evaluate(const PairPredicate& predict, std::string_view name,
                    std::span<const LabeledPair> pairs, Split split,
                    unsigned parallelism = 1);
EvalReport evaluate(const Matcher& matcher, std::span<const LabeledPair> pairs,
                    Split split, unsigned parallelism = 1);

// Both sides of every pair, in pair order.
std::vector<std::string> addresses_of(std::span<const LabeledPair> pairs);

// Compiles `config` (fitting tf-idf on the split's addresses, timed into
// fit_seconds) and evaluates it on that split.
EvalReport evaluate_algorithm(const AlgorithmConfig& config,
                              std::shared_ptr<const Resources> resources,
                              const Dataset& dataset, Split split,
                              unsigned parallelism = 1);

// Resolves "all" or a comma-free builtin name. Throws ConfigRejectedError
// listing the valid names for anything else.
std::vector<AlgorithmConfig> resolve_algorithms(std::string_view name);

std::string reports_to_json(std::span<const EvalReport> reports,
                            int indent = 2);

}  // namespace addrmatch

#endif  // ADDRMATCH_EVALUATION_HPP_
