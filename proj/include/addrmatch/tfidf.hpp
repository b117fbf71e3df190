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

#ifndef ADDRMATCH_TFIDF_HPP_
#define ADDRMATCH_TFIDF_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "addrmatch/record.hpp"

namespace addrmatch {

// Document frequencies over a corpus of tokenized or n-grammed records; each
// record is one document.
class TfidfModel {
 public:
  // Throws InvalidInputError for an empty corpus, records that are neither
  // tokenized nor n-grammed, or a corpus mixing the two.
  static TfidfModel fit(std::span<const AddressRecord> corpus);

  std::size_t n_documents() const { return n_documents_; }
  TermForm term_form() const { return term_form_; }
  std::uint64_t id() const { return id_; }
  std::size_t vocabulary_size() const { return document_frequency_.size(); }

  // 0 for terms never seen.
  std::size_t document_frequency(std::string_view term) const;
  // Smoothed: ln((1 + N) / (1 + df)) + 1.
  double idf(std::string_view term) const;

 private:
  std::unordered_map<std::string, std::size_t> document_frequency_;
  std::size_t n_documents_ = 0;
  TermForm term_form_ = TermForm::kTokens;
  std::uint64_t id_ = 0;
};

TfidfModel tfidf_fit(std::span<const AddressRecord> corpus);

// Each non-empty value-list becomes a single TermVector with
// weight(t) = tf(t) * idf(t), tf being the raw count in that list. Throws
// InvalidInputError when the record's term form differs from the model's.
AddressRecord tfidf_vectorize(const AddressRecord& record,
                              const TfidfModel& model);

}  // namespace addrmatch

#endif  // ADDRMATCH_TFIDF_HPP_
