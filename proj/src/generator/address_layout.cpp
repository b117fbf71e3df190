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
#include <cctype>

#include "addrmatch/error.hpp"
#include "addrmatch/generator.hpp"

namespace addrmatch {

namespace {

std::vector<std::string> split_spaces(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

bool is_unit_or_floor_word(std::string_view word) {
  const auto kind = prefix_kind_of(upper(word));
  return kind && *kind != PrefixKind::kName;
}

// Number of tokens at the end of `words` forming a (city, state) row, or 0.
std::size_t city_suffix_length(const std::vector<std::string>& words,
                               const CityTable& cities) {
  if (words.size() < 2) return 0;
  const std::string state = upper(words.back());
  std::size_t best = 0;
  for (const CityEntry& row : cities.rows()) {
    if (row.state != state) continue;
    const std::vector<std::string> city = split_spaces(row.city);
    if (city.size() + 1 > words.size() || city.size() + 1 <= best) continue;
    const std::size_t first = words.size() - 1 - city.size();
    bool same = true;
    for (std::size_t k = 0; k < city.size() && same; ++k) {
      same = upper(words[first + k]) == city[k];
    }
    if (same) best = city.size() + 1;
  }
  return best;
}

}  // namespace

std::string BaseAddress::to_string() const {
  return std::to_string(building_number) + " " + street_name + " " + city +
         " " + state;
}

bool BaseAddress::same_location(const BaseAddress& other) const {
  return building_number == other.building_number &&
         street_name == other.street_name && city == other.city &&
         state == other.state;
}

AddressLayout AddressLayout::from_base(const BaseAddress& base) {
  std::vector<AddressToken> tokens;
  tokens.push_back({std::to_string(base.building_number), TokenRole::kBuilding});
  for (std::string& w : split_spaces(base.street_name)) {
    tokens.push_back({std::move(w), TokenRole::kStreet});
  }
  for (std::string& w : split_spaces(base.city)) {
    tokens.push_back({std::move(w), TokenRole::kCity});
  }
  tokens.push_back({base.state, TokenRole::kState});
  return AddressLayout(std::move(tokens));
}

AddressLayout AddressLayout::parse(std::string_view address,
                                   const CityTable& cities) {
  const std::vector<std::string> words = split_spaces(address);
  std::size_t building = words.size();
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (all_digits(words[i]) && !all_digits(words[i + 1])) {
      building = i;
      break;
    }
  }
  if (building == words.size()) {
    throw InvalidInputError("no building number in \"" + std::string(address) +
                            "\"");
  }

  std::size_t city_len = city_suffix_length(words, cities);
  // The city may not reach back into the street.
  city_len = std::min(city_len, words.size() - building - 1);
  const std::size_t city_first = words.size() - city_len;

  std::size_t street_last = city_first;
  bool trailing_prefix = false;
  if (street_last >= building + 3 && all_digits(words[street_last - 1]) &&
      is_unit_or_floor_word(words[street_last - 2])) {
    street_last -= 2;
    trailing_prefix = true;
  }

  std::vector<AddressToken> tokens;
  for (std::size_t i = 0; i < building; ++i) {
    TokenRole role = TokenRole::kPersonName;
    if (prefix_kind_of(upper(words[i]))) {
      role = TokenRole::kPrefixWord;
    } else if (all_digits(words[i])) {
      role = TokenRole::kPrefixValue;
    }
    tokens.push_back({words[i], role});
  }
  tokens.push_back({words[building], TokenRole::kBuilding});
  for (std::size_t i = building + 1; i < street_last; ++i) {
    tokens.push_back({words[i], TokenRole::kStreet});
  }
  if (trailing_prefix) {
    tokens.push_back({words[street_last], TokenRole::kPrefixWord});
    tokens.push_back({words[street_last + 1], TokenRole::kPrefixValue});
  }
  for (std::size_t i = city_first; i < words.size(); ++i) {
    const bool is_state = city_len > 0 && i + 1 == words.size();
    tokens.push_back({words[i], is_state ? TokenRole::kState : TokenRole::kCity});
  }
  return AddressLayout(std::move(tokens));
}

std::string AddressLayout::render() const {
  std::string out;
  for (const AddressToken& token : tokens_) {
    if (token.text.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += token.text;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> AddressLayout::span_of(
    TokenRole role) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].role != role) continue;
    std::size_t j = i;
    while (j < tokens_.size() && tokens_[j].role == role) ++j;
    return std::make_pair(i, j);
  }
  return std::nullopt;
}

std::string AddressLayout::text_of(TokenRole role) const {
  std::string out;
  for (const AddressToken& token : tokens_) {
    if (token.role != role) continue;
    if (!out.empty()) out.push_back(' ');
    out += token.text;
  }
  return out;
}

}  // namespace addrmatch
