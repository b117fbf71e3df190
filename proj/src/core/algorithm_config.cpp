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

#include "addrmatch/algorithm_config.hpp"

#include <array>

namespace addrmatch {

std::string_view distance_name(Distance distance) {
  switch (distance) {
    case Distance::kSimple:
      return "simple";
    case Distance::kJaccard:
      return "jacquard";
    case Distance::kLevenshtein:
      return "levenshtein";
    case Distance::kJaroWinkler:
      return "jaro-winkler";
    case Distance::kCosine:
      return "cosine";
  }
  return "simple";
}

DeciderParams DeciderParams::defaults_for(Distance distance) {
  DeciderParams params;
  if (distance == Distance::kJaroWinkler) {
    params.ltv_min = 0.5;
    params.lta_max = 0.002;
  }
  return params;
}

ValidationResult validate_config(const AlgorithmConfig& config) {
  auto reject = [](std::string reason) {
    return ValidationResult{false, std::move(reason)};
  };
  if (config.tokens && config.ngrams) {
    return reject("tokens and n-grams are exclusive");
  }
  if (config.tfidf && config.distance != Distance::kCosine) {
    return reject("tf-idf requires cosine");
  }
  if (!config.tfidf && config.distance == Distance::kCosine) {
    return reject("cosine requires tf-idf");
  }
  if (config.tfidf && !config.tokens && !config.ngrams) {
    return reject("tf-idf requires tokens or n-grams");
  }
  const DeciderParams& t = config.thresholds;
  if (t.jaccard_threshold < 0 || t.ltv_min < 0 || t.lta_max < 0) {
    return reject("thresholds must be non-negative");
  }
  if (t.cosine_threshold < 0 || t.cosine_threshold > 1) {
    return reject("cosine threshold must lie in [0, 1]");
  }
  return {};
}

namespace {

AlgorithmConfig row(std::string name, bool normalization, bool segmentation,
                    bool tokens, bool ngrams, bool tfidf, Distance distance) {
  return AlgorithmConfig{std::move(name), normalization, segmentation,
                         tokens,          ngrams,        tfidf,
                         distance,        DeciderParams::defaults_for(distance)};
}

const std::array<AlgorithmConfig, 13>& builtin_table() {
  using D = Distance;
  static const std::array<AlgorithmConfig, 13> kTable = {
      //   name                         norm   seg    tok    ngram  tfidf
      row("plain",                      false, false, false, false, false, D::kSimple),
      row("normalized-plain",           true,  false, false, false, false, D::kSimple),
      row("tokens-jacquard",            true,  false, true,  false, false, D::kJaccard),
      row("n-grams-jacquard",           true,  false, false, true,  false, D::kJaccard),
      row("levenshtein",                true,  false, false, false, false, D::kLevenshtein),
      row("jaro-winkler",               true,  false, false, false, false, D::kJaroWinkler),
      row("tfidf",                      true,  false, false, true,  true,  D::kCosine),
      row("segment",                    true,  true,  false, false, false, D::kSimple),
      row("segment-levenshtein",        true,  true,  false, false, false, D::kLevenshtein),
      row("segment-jaro-winkler",       true,  true,  false, false, false, D::kJaroWinkler),
      row("segment-tokens-jacquard",    true,  true,  true,  false, false, D::kJaccard),
      row("segment-n-grams-jacquard",   true,  true,  false, true,  false, D::kJaccard),
      row("segment-tfidf",              true,  true,  false, true,  true,  D::kCosine),
  };
  return kTable;
}

}  // namespace

std::span<const AlgorithmConfig> builtin_algorithms() {
  return builtin_table();
}

std::optional<AlgorithmConfig> find_builtin_algorithm(std::string_view name) {
  for (const AlgorithmConfig& config : builtin_table()) {
    if (config.name == name) return config;
  }
  return std::nullopt;
}

}  // namespace addrmatch
