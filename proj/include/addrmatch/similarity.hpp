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

#ifndef ADDRMATCH_SIMILARITY_HPP_
#define ADDRMATCH_SIMILARITY_HPP_

#include <cstddef>
#include <string_view>

#include "addrmatch/algorithm_config.hpp"
#include "addrmatch/record.hpp"

namespace addrmatch {

// Unit-cost insert/delete/substitute distance over code points.
std::size_t levenshtein_distance(std::string_view s1, std::string_view s2);

// 1 - Jaro-Winkler similarity over code points (prefix scale 0.1, at most 4
// prefix characters). Two empty strings are at distance 0.
double jaro_winkler_distance(std::string_view s1, std::string_view s2);

double cosine_similarity(const TermVector& v1, const TermVector& v2);

// All deciders compare key by key and require every key to match. A key on
// which either record has an empty list matches.

// Value-lists compared as sets.
bool simple_match(const AddressRecord& r1, const AddressRecord& r2);

// Per key: 1 - |s1 & s2| / |s1 | s2| < JT * min(|s1|, |s2|).
bool jaccard_match(const AddressRecord& r1, const AddressRecord& r2,
                   const DeciderParams& params);

// Per key k: mean pairwise distance mu_k over all cross-list string pairs;
// the key fails when mu_k >= ltv_min * ML, ML the shortest string in both
// lists. If all keys pass, the records fail when the mean of mu_k over keys
// with at least one non-empty side (one-sided keys contribute 0) is
// >= lta_max * MA, MA the shorter of the original address lengths.
bool levenshtein_match(const AddressRecord& r1, const AddressRecord& r2,
                       const DeciderParams& params,
                       std::string_view original_a1,
                       std::string_view original_a2);
bool jaro_winkler_match(const AddressRecord& r1, const AddressRecord& r2,
                        const DeciderParams& params,
                        std::string_view original_a1,
                        std::string_view original_a2);

// Per key: cosine similarity >= cosine_threshold. Throws InvalidInputError
// for string-valued records or vectors from different models.
bool cosine_match(const AddressRecord& r1, const AddressRecord& r2,
                  const DeciderParams& params);

// Dispatches on `distance`.
bool decide(Distance distance, const AddressRecord& r1,
            const AddressRecord& r2, const DeciderParams& params,
            std::string_view original_a1, std::string_view original_a2);

}  // namespace addrmatch

#endif  // ADDRMATCH_SIMILARITY_HPP_
