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

#ifndef ADDRMATCH_ALGORITHM_CONFIG_HPP_
#define ADDRMATCH_ALGORITHM_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace addrmatch {

enum class Distance : std::uint8_t {
  kSimple,
  kJaccard,
  kLevenshtein,
  kJaroWinkler,
  kCosine,
};

std::string_view distance_name(Distance distance);

// Thresholds used by the match deciders.
//
// jaccard_threshold (JT): a key matches when its Jaccard distance is below
//   JT * min(|s1|, |s2|).
// ltv_min: a key fails when its mean pairwise distance reaches
//   ltv_min * (shortest string length across both value-lists).
// lta_max: the record fails when the mean over keys reaches
//   lta_max * (shorter original address length).
// cosine_threshold: minimum cosine similarity per key.
struct DeciderParams {
  double jaccard_threshold = 0.05;
  double ltv_min = 0.2;
  double lta_max = 0.2;
  double cosine_threshold = 0.75;

  // Defaults tuned per distance: 0.2/0.2 for Levenshtein, 0.5/0.002 for
  // Jaro-Winkler.
  static DeciderParams defaults_for(Distance distance);

  bool operator==(const DeciderParams&) const = default;
};

// The six-feature description of a baseline matcher.
struct AlgorithmConfig {
  std::string name;
  bool normalization = false;
  bool segmentation = false;
  bool tokens = false;
  bool ngrams = false;
  bool tfidf = false;
  Distance distance = Distance::kSimple;
  DeciderParams thresholds;

  bool operator==(const AlgorithmConfig&) const = default;
};

struct ValidationResult {
  bool accepted = true;
  std::string reason;  // names the violated constraint when rejected

  explicit operator bool() const { return accepted; }
};

// Accepts iff tokens/n-grams are exclusive, cosine is used exactly when
// tf-idf is, tf-idf has tokens or n-grams to weight, and all thresholds are
// non-negative (cosine threshold within [0, 1]).
ValidationResult validate_config(const AlgorithmConfig& config);

// The thirteen named baseline configurations, plain first and
// segment-tfidf last.
std::span<const AlgorithmConfig> builtin_algorithms();
std::optional<AlgorithmConfig> find_builtin_algorithm(std::string_view name);

}  // namespace addrmatch

#endif  // ADDRMATCH_ALGORITHM_CONFIG_HPP_
