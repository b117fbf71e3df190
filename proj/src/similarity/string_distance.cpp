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
#include <cmath>
#include <numeric>
#include <vector>

#include "addrmatch/error.hpp"
#include "addrmatch/similarity.hpp"
#include "addrmatch/utf8.hpp"

namespace addrmatch {

std::size_t levenshtein_distance(std::string_view s1, std::string_view s2) {
  const std::u32string a = utf8::decode(s1);
  const std::u32string b = utf8::decode(s2);
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  // Two-row dynamic program over the shorter string.
  const std::u32string& row_str = a.size() < b.size() ? a : b;
  const std::u32string& col_str = a.size() < b.size() ? b : a;
  std::vector<std::size_t> prev(row_str.size() + 1);
  std::vector<std::size_t> cur(row_str.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= col_str.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= row_str.size(); ++j) {
      const std::size_t subst =
          prev[j - 1] + (col_str[i - 1] == row_str[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[row_str.size()];
}

double jaro_winkler_distance(std::string_view s1, std::string_view s2) {
  const std::u32string a = utf8::decode(s1);
  const std::u32string b = utf8::decode(s2);
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return 1.0;

  const std::size_t longer = std::max(a.size(), b.size());
  const std::size_t window = longer / 2 > 0 ? longer / 2 - 1 : 0;
  std::vector<bool> a_matched(a.size(), false);
  std::vector<bool> b_matched(b.size(), false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (!b_matched[j] && a[i] == b[j]) {
        a_matched[i] = b_matched[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 1.0;

  std::size_t half_transpositions = 0;
  for (std::size_t i = 0, j = 0; i < a.size(); ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[j]) ++j;
    if (a[i] != b[j]) ++half_transpositions;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions) / 2.0;
  const double jaro = (m / static_cast<double>(a.size()) +
                       m / static_cast<double>(b.size()) + (m - t) / m) /
                      3.0;

  std::size_t prefix = 0;
  while (prefix < 4 && prefix < a.size() && prefix < b.size() &&
         a[prefix] == b[prefix]) {
    ++prefix;
  }
  const double similarity =
      jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
  return std::clamp(1.0 - similarity, 0.0, 1.0);
}

double cosine_similarity(const TermVector& v1, const TermVector& v2) {
  if (v1.model_id != v2.model_id) {
    throw InvalidInputError("term vectors come from different tf-idf models");
  }
  // Merge-join over the sorted maps; the sum order is the same either way
  // round, so the result is exactly symmetric.
  double dot = 0.0;
  auto it1 = v1.weights.begin();
  auto it2 = v2.weights.begin();
  while (it1 != v1.weights.end() && it2 != v2.weights.end()) {
    if (it1->first < it2->first) {
      ++it1;
    } else if (it2->first < it1->first) {
      ++it2;
    } else {
      dot += it1->second * it2->second;
      ++it1;
      ++it2;
    }
  }
  double n1 = 0.0;
  for (const auto& [term, w] : v1.weights) n1 += w * w;
  double n2 = 0.0;
  for (const auto& [term, w] : v2.weights) n2 += w * w;
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  return dot / (std::sqrt(n1) * std::sqrt(n2));
}

}  // namespace addrmatch
