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

#include "addrmatch/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "addrmatch/bundled_data.hpp"
#include "addrmatch/error.hpp"

namespace addrmatch {

namespace {

constexpr std::string_view kTagOpen = "\xE2\x9F\xA8";   // U+27E8
constexpr std::string_view kTagClose = "\xE2\x9F\xA9";  // U+27E9

constexpr std::array<std::string_view, 33> kTagNames = {
    "Apartment", "Suite",     "Unit",      "Room",      "Floor",
    "Level",     "Basement",  "Building",  "Attn",      "CareOf",
    "POBox",     "Street",    "Avenue",    "Road",      "Court",
    "Boulevard", "Lane",      "Drive",     "Place",     "Highway",
    "Parkway",   "Circle",    "Terrace",   "Square",    "Trail",
    "North",     "South",     "East",      "West",      "Northeast",
    "Northwest", "Southeast", "Southwest",
};

std::string upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(upper_ascii(w));
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::span<const std::string_view> canonical_tag_names() { return kTagNames; }

bool is_canonical_tag_name(std::string_view name) {
  return std::find(kTagNames.begin(), kTagNames.end(), name) != kTagNames.end();
}

std::string make_tag(std::string_view name) {
  std::string out(kTagOpen);
  out.append(name);
  out.append(kTagClose);
  return out;
}

bool is_tag_token(std::string_view token) {
  if (token.size() <= kTagOpen.size() + kTagClose.size()) return false;
  if (!token.starts_with(kTagOpen) || !token.ends_with(kTagClose)) {
    return false;
  }
  return is_canonical_tag_name(token.substr(
      kTagOpen.size(), token.size() - kTagOpen.size() - kTagClose.size()));
}

Lexicon Lexicon::parse(std::string_view tsv, std::string source) {
  Lexicon lex;
  lex.source_ = std::move(source);
  std::set<std::vector<std::string>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    std::size_t eol = tsv.find('\n', pos);
    if (eol == std::string_view::npos) eol = tsv.size();
    std::string_view line = tsv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fail = [&](const std::string& what) {
      return IngestionError(lex.source_ + ":" + std::to_string(line_no) + ": " +
                            what);
    };
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw fail("expected SURFACE<TAB>TAG<TAB>HINT");
    LexiconEntry entry;
    entry.surface = split_words(fields[0]);
    if (entry.surface.empty()) throw fail("empty surface form");
    if (!is_tag_token(fields[1])) {
      throw fail("unknown tag \"" + std::string(fields[1]) + "\"");
    }
    entry.tag = std::string(fields[1]);
    if (fields[2] != "-") {
      entry.hint = parse_field_key(fields[2]);
      if (!entry.hint) {
        throw fail("unknown field hint \"" + std::string(fields[2]) + "\"");
      }
    }
    if (!seen.insert(entry.surface).second) {
      throw fail("duplicate surface \"" + std::string(fields[0]) + "\"");
    }
    const auto [it, inserted] = lex.tag_hints_.emplace(entry.tag, entry.hint);
    if (!inserted && it->second != entry.hint) {
      throw fail("conflicting field hints for " + entry.tag);
    }
    lex.entries_.push_back(std::move(entry));
  }
  if (lex.entries_.empty()) throw IngestionError(lex.source_ + ": no entries");

  for (std::size_t i = 0; i < lex.entries_.size(); ++i) {
    lex.by_first_word_[lex.entries_[i].surface.front()].push_back(i);
  }
  for (auto& [word, indices] : lex.by_first_word_) {
    std::stable_sort(indices.begin(), indices.end(),
                     [&](std::size_t a, std::size_t b) {
                       return lex.entries_[a].surface.size() >
                              lex.entries_[b].surface.size();
                     });
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open lexicon " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon = parse(bundled_lexicon_tsv(), "<bundled>");
  return lexicon;
}

const LexiconEntry* Lexicon::longest_match(
    std::span<const std::string> upper_words, std::size_t pos) const {
  if (pos >= upper_words.size()) return nullptr;
  const auto it = by_first_word_.find(upper_words[pos]);
  if (it == by_first_word_.end()) return nullptr;
  for (std::size_t index : it->second) {
    const LexiconEntry& entry = entries_[index];
    if (pos + entry.surface.size() > upper_words.size()) continue;
    if (std::equal(entry.surface.begin(), entry.surface.end(),
                   upper_words.begin() + static_cast<std::ptrdiff_t>(pos))) {
      return &entry;
    }
  }
  return nullptr;
}

std::optional<FieldKey> Lexicon::hint_for_tag(std::string_view tag) const {
  const auto it = tag_hints_.find(std::string(tag));
  return it == tag_hints_.end() ? std::nullopt : it->second;
}

std::optional<FieldKey> Lexicon::hint_for_word(std::string_view word) const {
  const std::string key = upper_ascii(word);
  const auto it = by_first_word_.find(key);
  if (it == by_first_word_.end()) return std::nullopt;
  for (std::size_t index : it->second) {
    if (entries_[index].surface.size() == 1) return entries_[index].hint;
  }
  return std::nullopt;
}

}  // namespace addrmatch
