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

#include <algorithm>
#include <set>

#include "addrmatch/error.hpp"
#include "addrmatch/similarity.hpp"
#include "addrmatch/utf8.hpp"

namespace addrmatch {

namespace {

bool list_empty(const ValueList& values) {
  return std::visit([](const auto& list) { return list.empty(); }, values);
}

const StringList& strings_of(const AddressRecord& r, FieldKey key) {
  const auto* list = std::get_if<StringList>(&r.values(key));
  if (list == nullptr) {
    throw InvalidInputError("string decider applied to vectorized record");
  }
  return *list;
}

std::set<std::string_view> as_set(const StringList& list) {
  return {list.begin(), list.end()};
}

// Shared body of the Levenshtein and Jaro-Winkler deciders.
template <class Dist>
bool averaged_distance_match(const AddressRecord& r1, const AddressRecord& r2,
                             const DeciderParams& params,
                             std::string_view original_a1,
                             std::string_view original_a2, Dist&& dist) {
  double total = 0.0;
  std::size_t keys = 0;
  for (FieldKey key : kAllFieldKeys) {
    const StringList& l1 = strings_of(r1, key);
    const StringList& l2 = strings_of(r2, key);
    if (l1.empty() && l2.empty()) continue;
    ++keys;
    if (l1.empty() || l2.empty()) continue;  // counts as mu_k = 0

    double sum = 0.0;
    std::size_t min_len = SIZE_MAX;
    for (const std::string& s : l1) {
      min_len = std::min(min_len, utf8::length(s));
      for (const std::string& t : l2) sum += dist(s, t);
    }
    for (const std::string& t : l2) min_len = std::min(min_len, utf8::length(t));
    const double mu =
        sum / static_cast<double>(l1.size() * l2.size());
    if (mu >= params.ltv_min * static_cast<double>(min_len)) return false;
    total += mu;
  }
  if (keys == 0) return true;
  const double mean = total / static_cast<double>(keys);
  const double shortest = static_cast<double>(
      std::min(utf8::length(original_a1), utf8::length(original_a2)));
  return mean < params.lta_max * shortest;
}

}  // namespace

bool simple_match(const AddressRecord& r1, const AddressRecord& r2) {
  for (FieldKey key : kAllFieldKeys) {
    const StringList& l1 = strings_of(r1, key);
    const StringList& l2 = strings_of(r2, key);
    if (l1.empty() || l2.empty()) continue;
    if (as_set(l1) != as_set(l2)) return false;
  }
  return true;
}

bool jaccard_match(const AddressRecord& r1, const AddressRecord& r2,
                   const DeciderParams& params) {
  for (FieldKey key : kAllFieldKeys) {
    const StringList& l1 = strings_of(r1, key);
    const StringList& l2 = strings_of(r2, key);
    if (l1.empty() || l2.empty()) continue;
    const auto s1 = as_set(l1);
    const auto s2 = as_set(l2);
    std::size_t common = 0;
    for (std::string_view v : s1) common += s2.count(v);
    const std::size_t unions = s1.size() + s2.size() - common;
    const double distance =
        1.0 - static_cast<double>(common) / static_cast<double>(unions);
    const double bound = params.jaccard_threshold *
                         static_cast<double>(std::min(s1.size(), s2.size()));
    if (!(distance < bound)) return false;
  }
  return true;
}

bool levenshtein_match(const AddressRecord& r1, const AddressRecord& r2,
                       const DeciderParams& params,
                       std::string_view original_a1,
                       std::string_view original_a2) {
  return averaged_distance_match(
      r1, r2, params, original_a1, original_a2,
      [](std::string_view s, std::string_view t) {
        return static_cast<double>(levenshtein_distance(s, t));
      });
}

bool jaro_winkler_match(const AddressRecord& r1, const AddressRecord& r2,
                        const DeciderParams& params,
                        std::string_view original_a1,
                        std::string_view original_a2) {
  return averaged_distance_match(r1, r2, params, original_a1, original_a2,
                                 jaro_winkler_distance);
}

bool cosine_match(const AddressRecord& r1, const AddressRecord& r2,
                  const DeciderParams& params) {
  for (FieldKey key : kAllFieldKeys) {
    const ValueList& v1 = r1.values(key);
    const ValueList& v2 = r2.values(key);
    if (list_empty(v1) || list_empty(v2)) continue;
    const auto* l1 = std::get_if<VectorList>(&v1);
    const auto* l2 = std::get_if<VectorList>(&v2);
    if (l1 == nullptr || l2 == nullptr) {
      throw InvalidInputError("cosine decider needs tf-idf vectors");
    }
    // A key normally holds one vector; several are summed.
    const auto merged = [](const VectorList& list) {
      TermVector out = list.front();
      for (std::size_t i = 1; i < list.size(); ++i) {
        if (list[i].model_id != out.model_id) {
          throw InvalidInputError(
              "term vectors come from different tf-idf models");
        }
        for (const auto& [term, w] : list[i].weights) out.weights[term] += w;
      }
      return out;
    };
    if (cosine_similarity(merged(*l1), merged(*l2)) < params.cosine_threshold) {
      return false;
    }
  }
  return true;
}

bool decide(Distance distance, const AddressRecord& r1,
            const AddressRecord& r2, const DeciderParams& params,
            std::string_view original_a1, std::string_view original_a2) {
  switch (distance) {
    case Distance::kSimple:
      return simple_match(r1, r2);
    case Distance::kJaccard:
      return jaccard_match(r1, r2, params);
    case Distance::kLevenshtein:
      return levenshtein_match(r1, r2, params, original_a1, original_a2);
    case Distance::kJaroWinkler:
      return jaro_winkler_match(r1, r2, params, original_a1, original_a2);
    case Distance::kCosine:
      return cosine_match(r1, r2, params);
  }
  return false;
}

}  // namespace addrmatch
