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

#include "addrmatch/tfidf.hpp"

#include <atomic>
#include <cmath>
#include <unordered_set>

#include "addrmatch/error.hpp"

namespace addrmatch {

namespace {

std::atomic<std::uint64_t> next_model_id{1};

bool is_term_form(TermForm form) {
  return form == TermForm::kTokens || form == TermForm::kNgrams;
}

}  // namespace

TfidfModel TfidfModel::fit(std::span<const AddressRecord> corpus) {
  if (corpus.empty()) throw InvalidInputError("tf-idf needs a non-empty corpus");
  TfidfModel model;
  model.term_form_ = corpus.front().term_form();
  for (const AddressRecord& doc : corpus) {
    if (doc.vectorized() || !is_term_form(doc.term_form())) {
      throw InvalidInputError("tf-idf expects tokenized or n-grammed records");
    }
    if (doc.term_form() != model.term_form_) {
      throw InvalidInputError("tf-idf corpus mixes tokens and n-grams");
    }
    std::unordered_set<std::string_view> terms;
    for (FieldKey key : kAllFieldKeys) {
      for (const std::string& term : doc.strings(key)) terms.insert(term);
    }
    for (std::string_view term : terms) {
      ++model.document_frequency_[std::string(term)];
    }
  }
  model.n_documents_ = corpus.size();
  model.id_ = next_model_id.fetch_add(1);
  return model;
}

std::size_t TfidfModel::document_frequency(std::string_view term) const {
  const auto it = document_frequency_.find(std::string(term));
  return it == document_frequency_.end() ? 0 : it->second;
}

double TfidfModel::idf(std::string_view term) const {
  const double n = static_cast<double>(n_documents_);
  const double df = static_cast<double>(document_frequency(term));
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

TfidfModel tfidf_fit(std::span<const AddressRecord> corpus) {
  return TfidfModel::fit(corpus);
}

AddressRecord tfidf_vectorize(const AddressRecord& record,
                              const TfidfModel& model) {
  if (record.vectorized()) throw InvalidInputError("record already vectorized");
  if (record.term_form() != model.term_form()) {
    throw InvalidInputError("record and tf-idf model use different term forms");
  }
  AddressRecord out = record;
  for (FieldKey key : kAllFieldKeys) {
    VectorList vectors;
    const StringList& terms = record.strings(key);
    if (!terms.empty()) {
      TermVector v;
      v.model_id = model.id();
      for (const std::string& term : terms) v.weights[term] += 1.0;
      for (auto& [term, weight] : v.weights) weight *= model.idf(term);
      vectors.push_back(std::move(v));
    }
    out.set(key, std::move(vectors));
  }
  out.set_vectorized(true);
  return out;
}

}  // namespace addrmatch
