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

#ifndef ADDRMATCH_PIPELINE_HPP_
#define ADDRMATCH_PIPELINE_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addrmatch/algorithm_config.hpp"
#include "addrmatch/city_table.hpp"
#include "addrmatch/lexicon.hpp"
#include "addrmatch/record.hpp"
#include "addrmatch/segment.hpp"
#include "addrmatch/tfidf.hpp"

namespace addrmatch {

// Lexicon, city table, and the segmenter compiled from them. Shared,
// immutable.
struct Resources {
  Resources(Lexicon lexicon, CityTable cities);

  Lexicon lexicon;
  CityTable cities;
  Segmenter segmenter;

  static std::shared_ptr<const Resources> bundled();
};

enum class ChainStep : std::uint8_t {
  kNormalize,
  kSegment,
  kTokens,
  kNgrams,
  kTfidf,
};

std::string_view chain_step_name(ChainStep step);

// A compiled baseline: representation chain plus decider. Immutable; match()
// may be called concurrently.
class Matcher {
 public:
  const std::string& name() const { return config_.name; }
  const AlgorithmConfig& config() const { return config_; }
  const std::vector<ChainStep>& chain() const { return chain_; }
  Distance decider() const { return config_.distance; }
  const std::optional<TfidfModel>& fitted_model() const { return model_; }

  // Applies the chain to make_record(raw).
  AddressRecord represent(std::string_view raw) const;
  bool match(std::string_view a1, std::string_view a2) const;

 private:
  friend Matcher compile(const AlgorithmConfig&,
                         std::shared_ptr<const Resources>,
                         std::span<const std::string>);

  AddressRecord represent_before_tfidf(std::string_view raw) const;

  AlgorithmConfig config_;
  std::vector<ChainStep> chain_;
  std::shared_ptr<const Resources> resources_;
  std::optional<TfidfModel> model_;
};

// Chain is [normalize][segment][tokens | ngrams][tfidf] in that order. For
// tf-idf configs the model is fitted on `fit_corpus` (raw addresses, run
// through the preceding steps). Throws ConfigRejectedError for invalid
// configs and InvalidInputError for a tf-idf config without a corpus.
Matcher compile(const AlgorithmConfig& config,
                std::shared_ptr<const Resources> resources,
                std::span<const std::string> fit_corpus = {});

bool match_pair(const Matcher& matcher, std::string_view a1,
                std::string_view a2);

}  // namespace addrmatch

#endif  // ADDRMATCH_PIPELINE_HPP_
