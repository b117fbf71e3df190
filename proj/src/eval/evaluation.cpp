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

#include "addrmatch/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "addrmatch/error.hpp"
#include "json.hpp"

namespace addrmatch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ConfusionCounts tally(const PairPredicate& predict,
                      std::span<const LabeledPair> pairs) {
  ConfusionCounts counts;
  for (const LabeledPair& pair : pairs) {
    const bool predicted = predict(pair.a1, pair.a2);
    if (pair.label == 1) {
      ++(predicted ? counts.tp : counts.fn);
    } else {
      ++(predicted ? counts.fp : counts.tn);
    }
  }
  return counts;
}

}  // namespace

EvalReport evaluate(const PairPredicate& predict, std::string_view name,
                    std::span<const LabeledPair> pairs, Split split,
                    unsigned parallelism) {
  if (pairs.empty()) throw InvalidInputError("no pairs to evaluate");
  const std::size_t workers =
      std::clamp<std::size_t>(parallelism, 1, pairs.size());

  const auto start = Clock::now();
  ConfusionCounts counts;
  if (workers == 1) {
    counts = tally(predict, pairs);
  } else {
    std::vector<ConfusionCounts> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(pairs.size(), w * chunk);
      const std::size_t last = std::min(pairs.size(), first + chunk);
      threads.emplace_back([&, w, first, last] {
        try {
          partial[w] = tally(predict, pairs.subspan(first, last - first));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const ConfusionCounts& c : partial) counts += c;
  }
  EvalReport report = EvalReport::from_counts(std::string(name), split, counts);
  report.elapsed_seconds = seconds_since(start);
  report.parallelism = static_cast<unsigned>(workers);
  return report;
}

EvalReport evaluate(const Matcher& matcher, std::span<const LabeledPair> pairs,
                    Split split, unsigned parallelism) {
  return evaluate(
      [&matcher](std::string_view a1, std::string_view a2) {
        return matcher.match(a1, a2);
      },
      matcher.name(), pairs, split, parallelism);
}

std::vector<std::string> addresses_of(std::span<const LabeledPair> pairs) {
  std::vector<std::string> out;
  out.reserve(2 * pairs.size());
  for (const LabeledPair& pair : pairs) {
    out.push_back(pair.a1);
    out.push_back(pair.a2);
  }
  return out;
}

EvalReport evaluate_algorithm(const AlgorithmConfig& config,
                              std::shared_ptr<const Resources> resources,
                              const Dataset& dataset, Split split,
                              unsigned parallelism) {
  const std::vector<LabeledPair> pairs = dataset.split(split);
  if (pairs.empty()) {
    throw InvalidInputError("split \"" + std::string(split_name(split)) +
                            "\" has no pairs");
  }
  const auto fit_start = Clock::now();
  std::vector<std::string> corpus;
  if (config.tfidf) corpus = addresses_of(pairs);
  const Matcher matcher = compile(config, std::move(resources), corpus);
  const double fit_seconds = seconds_since(fit_start);

  EvalReport report = evaluate(matcher, pairs, split, parallelism);
  report.fit_seconds = fit_seconds;
  return report;
}

std::vector<AlgorithmConfig> resolve_algorithms(std::string_view name) {
  const auto builtins = builtin_algorithms();
  if (name == "all") return {builtins.begin(), builtins.end()};
  if (auto config = find_builtin_algorithm(name)) return {*config};
  std::string valid = "all";
  for (const AlgorithmConfig& c : builtins) valid += ", " + c.name;
  throw ConfigRejectedError("unknown algorithm \"" + std::string(name) +
                            "\"; valid names: " + valid);
}

std::string reports_to_json(std::span<const EvalReport> reports, int indent) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const EvalReport& r : reports) {
    array.push_back(nlohmann::ordered_json::parse(report_to_json(r)));
  }
  return array.dump(indent);
}

}  // namespace addrmatch
