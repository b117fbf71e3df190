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

#include "addrmatch/segment.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "addrmatch/error.hpp"
#include "addrmatch/representation.hpp"

namespace addrmatch {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::string> upper_words(std::string_view text) {
  std::vector<std::string> out = split_tokens(text);
  for (std::string& w : out) w = upper(w);
  return out;
}

// Whitespace tokens with every comma split off as its own "," token.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  const auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == ',') {
      flush();
      out.emplace_back(",");
    } else {
      current.push_back(c);
    }
  }
  flush();
  return out;
}

bool is_number(std::string_view token) {
  if (token.empty() || !std::isdigit(static_cast<unsigned char>(token[0]))) {
    return false;
  }
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '/';
  });
}

bool is_postcode(std::string_view token) {
  const auto digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  if (token.size() == 5) return digits(token);
  return token.size() == 10 && token[5] == '-' && digits(token.substr(0, 5)) &&
         digits(token.substr(6));
}

std::string join(const std::vector<std::string>& tokens, std::size_t first,
                 std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (tokens[i] == ",") continue;
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

// Working state for segmenting one address string.
class Extraction {
 public:
  Extraction(std::string_view text, const Lexicon& lexicon)
      : tokens_(tokenize(text)),
        consumed_(tokens_.size(), false),
        lexicon_(lexicon) {}

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& at(std::size_t i) const { return tokens_[i]; }

  bool free(std::size_t i) const { return i < size() && !consumed_[i]; }
  bool comma(std::size_t i) const { return tokens_[i] == ","; }
  bool tag(std::size_t i) const { return is_tag_token(tokens_[i]); }
  bool number(std::size_t i) const { return is_number(tokens_[i]); }
  bool word(std::size_t i) const { return !comma(i) && !tag(i) && !number(i); }
  std::optional<FieldKey> hint(std::size_t i) const {
    return tag(i) ? lexicon_.hint_for_tag(tokens_[i]) : std::nullopt;
  }
  bool tag_with(std::size_t i, FieldKey key) const {
    return tag(i) && hint(i) == key;
  }
  // A tag without a field hint, i.e. a directional.
  bool plain_tag(std::size_t i) const { return tag(i) && !hint(i); }

  void consume(std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) consumed_[i] = true;
  }

  // Unconsumed non-comma runs.
  std::vector<std::string> residue() const {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < size()) {
      if (!free(i) || comma(i)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < size() && free(j) && !comma(j)) ++j;
      out.push_back(join(tokens_, i, j));
      i = j;
    }
    return out;
  }

 private:
  std::vector<std::string> tokens_;
  std::vector<bool> consumed_;
  const Lexicon& lexicon_;
};

using Fields = std::array<StringList, kFieldKeyCount>;

void add(Fields& fields, FieldKey key, std::string value) {
  fields[static_cast<std::size_t>(key)].push_back(std::move(value));
}

void extract_person(Extraction& x, Fields& fields) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.free(i) || !x.tag_with(i, FieldKey::kPerson)) continue;
    std::size_t j = i + 1;
    while (x.free(j) && x.word(j)) ++j;
    if (j == i + 1) continue;
    add(fields, FieldKey::kPerson, join(x.tokens(), i + 1, j));
    x.consume(i, j);
  }
}

void extract_tail(Extraction& x, const CityMatcher& cities, Fields& fields) {
  std::size_t end = x.size();
  const auto skip_commas = [&] {
    while (end > 0 && x.free(end - 1) && x.comma(end - 1)) --end;
  };
  skip_commas();
  if (end > 0 && x.free(end - 1)) {
    const std::string last = upper(x.at(end - 1));
    if (last == "USA" || last == "US") {
      add(fields, FieldKey::kCountry, x.at(end - 1));
      x.consume(end - 1, end);
      --end;
      skip_commas();
    }
  }
  if (end > 0 && x.free(end - 1) && is_postcode(x.at(end - 1))) {
    add(fields, FieldKey::kPostCode, x.at(end - 1));
    x.consume(end - 1, end);
    --end;
  }
  const auto match = cities.match_suffix(x.tokens(), end);
  if (!match) return;
  for (std::size_t i = match->city_first; i <= match->state; ++i) {
    if (!x.free(i)) return;
  }
  add(fields, FieldKey::kCity,
      join(x.tokens(), match->city_first, match->city_last));
  add(fields, FieldKey::kCountyState, x.at(match->state));
  x.consume(match->city_first, match->state + 1);
}

void extract_street(Extraction& x, Fields& fields) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!x.free(i) || !x.number(i) || !x.free(i + 1)) continue;
    const bool starts_name =
        x.word(i + 1) || x.plain_tag(i + 1) ||
        x.tag_with(i + 1, FieldKey::kStreetName);
    if (!starts_name) continue;

    std::size_t j = i + 1;
    while (x.free(j) && !x.comma(j) && !x.number(j)) {
      if (x.tag_with(j, FieldKey::kStreetName)) {
        ++j;
        if (x.free(j) && x.plain_tag(j)) ++j;
        break;
      }
      if (x.tag(j) && !x.plain_tag(j)) break;
      ++j;
    }
    add(fields, FieldKey::kStreetNumber, x.at(i));
    add(fields, FieldKey::kStreetName, join(x.tokens(), i + 1, j));
    x.consume(i, j);
    return;
  }
}

void extract_numbered(Extraction& x, Fields& fields) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.free(i) || !x.tag(i)) continue;
    const auto hint = x.hint(i);
    if (hint != FieldKey::kUnit && hint != FieldKey::kFloor) continue;
    std::size_t value;
    if (x.free(i + 1) && x.number(i + 1)) {
      value = i + 1;
    } else if (i > 0 && x.free(i - 1) && x.number(i - 1)) {
      value = i - 1;
    } else {
      continue;
    }
    add(fields, *hint, x.at(value));
    x.consume(std::min(i, value), std::max(i, value) + 1);
  }
}

void extract_pobox(Extraction& x, Fields& fields) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x.free(i) && x.tag_with(i, FieldKey::kPOBox) && x.free(i + 1) &&
        x.number(i + 1)) {
      add(fields, FieldKey::kPOBox, x.at(i + 1));
      x.consume(i, i + 2);
    }
  }
}

void extract_house(Extraction& x, Fields& fields) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.free(i) || !x.tag_with(i, FieldKey::kHouse)) continue;
    std::size_t first = i;
    while (first > 0 && x.free(first - 1) && x.word(first - 1)) --first;
    std::size_t last = i + 1;
    if (first == i && x.free(i + 1) && x.number(i + 1)) last = i + 2;
    add(fields, FieldKey::kHouse, join(x.tokens(), first, last));
    x.consume(first, last);
  }
}

}  // namespace

CityMatcher::CityMatcher(const CityTable& cities, const Lexicon& lexicon) {
  std::unordered_map<std::string, std::set<std::vector<std::string>>> spellings;
  for (const CityEntry& row : cities.rows()) {
    spellings[upper(row.state)].insert(upper_words(row.city));
    const std::vector<std::string> state =
        upper_words(normalize_text(row.state, lexicon));
    if (state.size() == 1) {
      spellings[state.front()].insert(
          upper_words(normalize_text(row.city, lexicon)));
    }
  }
  for (auto& [state, names] : spellings) {
    auto& list = by_state_[state];
    for (const auto& name : names) {
      if (!name.empty()) list.push_back(name);
    }
    std::stable_sort(list.begin(), list.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() > b.size();
                     });
  }
}

std::optional<CityMatcher::Match> CityMatcher::match_suffix(
    std::span<const std::string> tokens, std::size_t end) const {
  end = std::min(end, tokens.size());
  while (end > 0 && tokens[end - 1] == ",") --end;
  if (end == 0) return std::nullopt;
  const std::size_t state = end - 1;
  const auto it = by_state_.find(upper(tokens[state]));
  if (it == by_state_.end()) return std::nullopt;
  std::size_t k = state;
  while (k > 0 && tokens[k - 1] == ",") --k;
  for (const std::vector<std::string>& city : it->second) {
    if (city.size() > k) continue;
    const std::size_t first = k - city.size();
    bool same = true;
    for (std::size_t t = 0; t < city.size() && same; ++t) {
      same = upper(tokens[first + t]) == city[t];
    }
    if (same) return Match{first, k, state};
  }
  return std::nullopt;
}

Segmenter::Segmenter(const Lexicon& lexicon, const CityTable& cities)
    : lexicon_(lexicon), cities_(cities, lexicon) {}

AddressRecord Segmenter::operator()(const AddressRecord& record) const {
  Fields fields;
  for (FieldKey key : kAllFieldKeys) {
    if (key != FieldKey::kAddress) {
      fields[static_cast<std::size_t>(key)] = record.strings(key);
    }
  }
  for (const std::string& text : record.strings(FieldKey::kAddress)) {
    Extraction x(text, lexicon_);
    extract_person(x, fields);
    extract_tail(x, cities_, fields);
    extract_street(x, fields);
    extract_numbered(x, fields);
    extract_pobox(x, fields);
    extract_house(x, fields);
    for (std::string& rest : x.residue()) {
      add(fields, FieldKey::kAddress, std::move(rest));
    }
  }
  AddressRecord out = record;
  for (FieldKey key : kAllFieldKeys) {
    out.set(key, std::move(fields[static_cast<std::size_t>(key)]));
  }
  return out;
}

AddressRecord segment(const AddressRecord& record, const Segmenter& segmenter) {
  if (record.vectorized() || record.term_form() != TermForm::kText) {
    throw InvalidInputError("segment expects a record of plain strings");
  }
  return segmenter(record);
}

}  // namespace addrmatch
