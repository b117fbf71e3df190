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

#include "addrmatch/pipeline.hpp"

#include "addrmatch/error.hpp"
#include "addrmatch/representation.hpp"
#include "addrmatch/similarity.hpp"

namespace addrmatch {

Resources::Resources(Lexicon lexicon_in, CityTable cities_in)
    : lexicon(std::move(lexicon_in)),
      cities(std::move(cities_in)),
      segmenter(lexicon, cities) {}

std::shared_ptr<const Resources> Resources::bundled() {
  static const std::shared_ptr<const Resources> resources =
      std::make_shared<const Resources>(Lexicon::bundled(),
                                        CityTable::bundled());
  return resources;
}

std::string_view chain_step_name(ChainStep step) {
  switch (step) {
    case ChainStep::kNormalize:
      return "normalize";
    case ChainStep::kSegment:
      return "segment";
    case ChainStep::kTokens:
      return "tokens";
    case ChainStep::kNgrams:
      return "ngrams";
    case ChainStep::kTfidf:
      return "tfidf";
  }
  return "";
}

AddressRecord Matcher::represent_before_tfidf(std::string_view raw) const {
  AddressRecord record = make_record(raw);
  for (ChainStep step : chain_) {
    switch (step) {
      case ChainStep::kNormalize:
        record = normalize(record, resources_->lexicon);
        break;
      case ChainStep::kSegment:
        record = segment(record, resources_->segmenter);
        break;
      case ChainStep::kTokens:
        record = tokens(record);
        break;
      case ChainStep::kNgrams:
        record = ngrams(record, 3);
        break;
      case ChainStep::kTfidf:
        break;
    }
  }
  return record;
}

AddressRecord Matcher::represent(std::string_view raw) const {
  AddressRecord record = represent_before_tfidf(raw);
  if (model_) record = tfidf_vectorize(record, *model_);
  return record;
}

bool Matcher::match(std::string_view a1, std::string_view a2) const {
  return decide(config_.distance, represent(a1), represent(a2),
                config_.thresholds, a1, a2);
}

Matcher compile(const AlgorithmConfig& config,
                std::shared_ptr<const Resources> resources,
                std::span<const std::string> fit_corpus) {
  const ValidationResult verdict = validate_config(config);
  if (!verdict) {
    throw ConfigRejectedError("algorithm \"" + config.name +
                              "\" rejected: " + verdict.reason);
  }
  if (!resources) resources = Resources::bundled();

  Matcher m;
  m.config_ = config;
  m.resources_ = std::move(resources);
  if (config.normalization) m.chain_.push_back(ChainStep::kNormalize);
  if (config.segmentation) m.chain_.push_back(ChainStep::kSegment);
  if (config.tokens) m.chain_.push_back(ChainStep::kTokens);
  if (config.ngrams) m.chain_.push_back(ChainStep::kNgrams);
  if (config.tfidf) {
    m.chain_.push_back(ChainStep::kTfidf);
    if (fit_corpus.empty()) {
      throw InvalidInputError("algorithm \"" + config.name +
                              "\" needs a corpus to fit tf-idf on");
    }
    std::vector<AddressRecord> docs;
    docs.reserve(fit_corpus.size());
    for (const std::string& raw : fit_corpus) {
      docs.push_back(m.represent_before_tfidf(raw));
    }
    m.model_ = TfidfModel::fit(docs);
  }
  return m;
}

bool match_pair(const Matcher& matcher, std::string_view a1,
                std::string_view a2) {
  return matcher.match(a1, a2);
}

}  // namespace addrmatch
