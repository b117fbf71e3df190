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
#include <array>
#include <cctype>

#include "addrmatch/generator.hpp"

namespace addrmatch {

namespace {

constexpr std::string_view kInsertAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

// Street tokens that may receive character edits: the name words, i.e. every
// street token except a trailing street-type suffix.
std::vector<std::size_t> street_name_word_indices(const AddressLayout& address) {
  std::vector<std::size_t> out;
  const auto span = address.span_of(TokenRole::kStreet);
  if (!span) return out;
  auto [first, last] = *span;
  if (last - first >= 2) --last;
  for (std::size_t i = first; i < last; ++i) out.push_back(i);
  return out;
}

std::string random_street(Rng& rng) {
  return std::string(rng.pick(name_words())) + " " +
         std::string(rng.pick(street_suffixes()));
}

void replace_role(AddressLayout& address, TokenRole role,
                  std::vector<AddressToken> replacement) {
  auto& tokens = address.tokens();
  const auto span = address.span_of(role);
  if (!span) return;
  tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(span->first),
               tokens.begin() + static_cast<std::ptrdiff_t>(span->second));
  tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(span->first),
                replacement.begin(), replacement.end());
}

std::vector<AddressToken> role_tokens(std::string_view text, TokenRole role) {
  std::vector<AddressToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t j = std::min(text.find(' ', i), text.size());
    if (j > i) out.push_back({std::string(text.substr(i, j - i)), role});
    i = j + 1;
  }
  return out;
}

}  // namespace

std::string_view match_op_name(MatchOp op) {
  switch (op) {
    case MatchOp::kWordSubstitute:
      return "word_substitute";
    case MatchOp::kWordDelete:
      return "word_delete";
    case MatchOp::kCharAdd:
      return "char_add";
    case MatchOp::kCharDelete:
      return "char_delete";
    case MatchOp::kPermute:
      return "permute";
  }
  return "";
}

std::string_view mismatch_op_name(MismatchOp op) {
  switch (op) {
    case MismatchOp::kBuildingRedirect:
      return "building_redirect";
    case MismatchOp::kStreetRedirect:
      return "street_redirect";
    case MismatchOp::kCityRedirect:
      return "city_redirect";
    case MismatchOp::kPoolSwap:
      return "pool_swap";
  }
  return "";
}

AddressLayout word_substitute(AddressLayout address, Rng& rng) {
  std::vector<std::size_t> candidates;
  const auto& tokens = address.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const bool eligible_role = tokens[i].role == TokenRole::kPrefixWord ||
                               tokens[i].role == TokenRole::kStreet;
    if (eligible_role && substitution_group_of(tokens[i].text) != nullptr) {
      candidates.push_back(i);
    }
  }
  if (candidates.empty()) return address;
  const std::size_t i = candidates[rng.below(candidates.size())];
  std::string& word = address.tokens()[i].text;
  const SubstitutionGroup& group = *substitution_group_of(word);
  word = std::string(group[0] == word ? group[1] : group[0]);
  return address;
}

AddressLayout word_delete(AddressLayout address, Rng& rng) {
  std::vector<std::size_t> candidates;
  const auto& tokens = address.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].role == TokenRole::kPrefixWord ||
        tokens[i].role == TokenRole::kPrefixValue) {
      candidates.push_back(i);
    }
  }
  if (candidates.empty()) return address;
  const std::size_t i = candidates[rng.below(candidates.size())];
  address.tokens().erase(address.tokens().begin() +
                         static_cast<std::ptrdiff_t>(i));
  return address;
}

AddressLayout char_add(AddressLayout address, Rng& rng) {
  const auto candidates = street_name_word_indices(address);
  if (candidates.empty()) return address;
  std::string& word =
      address.tokens()[candidates[rng.below(candidates.size())]].text;
  const std::size_t pos = rng.below(word.size() + 1);
  const char c = kInsertAlphabet[rng.below(kInsertAlphabet.size())];
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), c);
  return address;
}

AddressLayout char_delete(AddressLayout address, Rng& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t i : street_name_word_indices(address)) {
    if (address.tokens()[i].text.size() >= 2) candidates.push_back(i);
  }
  if (candidates.empty()) return address;
  std::string& word =
      address.tokens()[candidates[rng.below(candidates.size())]].text;
  word.erase(rng.below(word.size()), 1);
  return address;
}

AddressLayout permute(AddressLayout address) {
  auto& tokens = address.tokens();
  if (tokens.size() < 2 || tokens[0].role != TokenRole::kPrefixWord ||
      tokens[1].role != TokenRole::kPrefixValue) {
    return address;
  }
  const auto kind = prefix_kind_of(tokens[0].text);
  if (!kind || *kind == PrefixKind::kName) return address;
  const auto street = address.span_of(TokenRole::kStreet);
  if (!street) return address;
  // Rotate the two prefix tokens to sit right after the street.
  std::rotate(tokens.begin(), tokens.begin() + 2,
              tokens.begin() + static_cast<std::ptrdiff_t>(street->second));
  return address;
}

AddressLayout building_redirect(AddressLayout address, Rng& rng) {
  for (AddressToken& token : address.tokens()) {
    if (token.role != TokenRole::kBuilding) continue;
    const long long original = std::stoll(token.text);
    for (;;) {
      const bool up = rng.coin();
      const long long delta = rng.uniform(1, 10);
      const long long next = std::max(1LL, up ? original + delta
                                              : original - delta);
      if (next != original) {
        token.text = std::to_string(next);
        break;
      }
    }
    break;
  }
  return address;
}

AddressLayout street_redirect(AddressLayout address, Rng& rng) {
  const std::string current = address.text_of(TokenRole::kStreet);
  if (current.empty()) return address;
  std::string next = random_street(rng);
  while (next == current) next = random_street(rng);
  replace_role(address, TokenRole::kStreet,
               role_tokens(next, TokenRole::kStreet));
  return address;
}

AddressLayout city_redirect(AddressLayout address, const CityTable& cities,
                            Rng& rng) {
  // Table rows are uppercase; the address may not be.
  const auto upper = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
      return static_cast<char>(std::toupper(c));
    });
    return s;
  };
  const std::string city = upper(address.text_of(TokenRole::kCity));
  const std::string state = upper(address.text_of(TokenRole::kState));
  if (state.empty() || cities.size() < 2) return address;
  const CityEntry* row = &cities.rows()[rng.below(cities.size())];
  while (row->city == city && row->state == state) {
    row = &cities.rows()[rng.below(cities.size())];
  }
  replace_role(address, TokenRole::kCity, role_tokens(row->city, TokenRole::kCity));
  replace_role(address, TokenRole::kState, {{row->state, TokenRole::kState}});
  return address;
}

AddressLayout apply_match_op(MatchOp op, AddressLayout address, Rng& rng) {
  switch (op) {
    case MatchOp::kWordSubstitute:
      return word_substitute(std::move(address), rng);
    case MatchOp::kWordDelete:
      return word_delete(std::move(address), rng);
    case MatchOp::kCharAdd:
      return char_add(std::move(address), rng);
    case MatchOp::kCharDelete:
      return char_delete(std::move(address), rng);
    case MatchOp::kPermute:
      return permute(std::move(address));
  }
  return address;
}

std::string word_substitute(std::string_view address, const CityTable& cities,
                            Rng& rng) {
  return word_substitute(AddressLayout::parse(address, cities), rng).render();
}

std::string word_delete(std::string_view address, const CityTable& cities,
                        Rng& rng) {
  return word_delete(AddressLayout::parse(address, cities), rng).render();
}

std::string char_add(std::string_view address, const CityTable& cities,
                     Rng& rng) {
  return char_add(AddressLayout::parse(address, cities), rng).render();
}

std::string char_delete(std::string_view address, const CityTable& cities,
                        Rng& rng) {
  return char_delete(AddressLayout::parse(address, cities), rng).render();
}

std::string permute(std::string_view address, const CityTable& cities) {
  return permute(AddressLayout::parse(address, cities)).render();
}

std::string building_redirect(std::string_view address,
                              const CityTable& cities, Rng& rng) {
  return building_redirect(AddressLayout::parse(address, cities), rng)
      .render();
}

std::string street_redirect(std::string_view address, const CityTable& cities,
                            Rng& rng) {
  return street_redirect(AddressLayout::parse(address, cities), rng).render();
}

std::string city_redirect(std::string_view address, const CityTable& cities,
                          Rng& rng) {
  return city_redirect(AddressLayout::parse(address, cities), cities, rng)
      .render();
}

}  // namespace addrmatch
