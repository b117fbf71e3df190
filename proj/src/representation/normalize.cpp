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

#include <cctype>

#include "addrmatch/error.hpp"
#include "addrmatch/representation.hpp"

namespace addrmatch {

namespace {

constexpr std::string_view kTagOpen = "\xE2\x9F\xA8";
constexpr std::string_view kTagClose = "\xE2\x9F\xA9";

enum class Kind { kWord, kTag, kComma };

struct Piece {
  std::string text;
  Kind kind;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

// Splits raw text into words, canonical tags and commas, dropping everything
// that is neither.
std::vector<Piece> scan(std::string_view text) {
  std::vector<Piece> out;
  std::string word;
  const auto flush = [&] {
    if (!word.empty()) out.push_back({std::move(word), Kind::kWord});
    word.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (text.substr(i).starts_with(kTagOpen)) {
      const std::size_t close = text.find(kTagClose, i + kTagOpen.size());
      if (close != std::string_view::npos) {
        const std::string_view tag =
            text.substr(i, close + kTagClose.size() - i);
        if (is_tag_token(tag)) {
          flush();
          out.push_back({std::string(tag), Kind::kTag});
          i = close + kTagClose.size();
          continue;
        }
      }
    }
    ++i;
    if (static_cast<unsigned char>(c) >= 0x80 || c == '.') continue;
    if (is_alnum(c)) {
      word.push_back(c);
    } else if (c == ',' || c == ';') {
      flush();
      out.push_back({",", Kind::kComma});
    } else if ((c == '/' || c == '-' || c == '\'' || c == '&') &&
               !word.empty() && is_alnum(word.back()) && i < text.size() &&
               is_alnum(text[i])) {
      word.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

// Leading, trailing and repeated commas carry no information.
std::vector<Piece> tidy_commas(std::vector<Piece> pieces) {
  std::vector<Piece> out;
  for (Piece& p : pieces) {
    if (p.kind == Kind::kComma &&
        (out.empty() || out.back().kind == Kind::kComma)) {
      continue;
    }
    out.push_back(std::move(p));
  }
  if (!out.empty() && out.back().kind == Kind::kComma) out.pop_back();
  return out;
}

// "3rd" -> "3"
void strip_ordinal(std::string& word) {
  if (word.size() < 3) return;
  const std::string suffix = {
      static_cast<char>(std::toupper(static_cast<unsigned char>(word[word.size() - 2]))),
      static_cast<char>(std::toupper(static_cast<unsigned char>(word.back())))};
  if (suffix != "ST" && suffix != "ND" && suffix != "RD" && suffix != "TH") {
    return;
  }
  for (std::size_t k = 0; k + 2 < word.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(word[k]))) return;
  }
  word.resize(word.size() - 2);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

// Greedy longest-match replacement within each run of plain words.
std::vector<Piece> apply_lexicon(const std::vector<Piece>& pieces,
                                 const Lexicon& lexicon) {
  std::vector<Piece> out;
  std::size_t i = 0;
  while (i < pieces.size()) {
    if (pieces[i].kind != Kind::kWord) {
      out.push_back(pieces[i++]);
      continue;
    }
    std::size_t end = i;
    std::vector<std::string> run;
    while (end < pieces.size() && pieces[end].kind == Kind::kWord) {
      run.push_back(upper(pieces[end++].text));
    }
    std::size_t k = 0;
    while (k < run.size()) {
      if (const LexiconEntry* entry = lexicon.longest_match(run, k)) {
        out.push_back({entry->tag, Kind::kTag});
        k += entry->surface.size();
      } else {
        out.push_back(pieces[i + k]);
        ++k;
      }
    }
    i = end;
  }
  return out;
}

}  // namespace

std::string normalize_text(std::string_view text, const Lexicon& lexicon) {
  std::vector<Piece> pieces = tidy_commas(scan(text));
  for (Piece& p : pieces) {
    if (p.kind == Kind::kWord) strip_ordinal(p.text);
  }
  pieces = apply_lexicon(pieces, lexicon);
  std::string out;
  for (const Piece& p : pieces) {
    if (p.kind != Kind::kComma && !out.empty()) out.push_back(' ');
    out += p.text;
  }
  return out;
}

AddressRecord normalize(const AddressRecord& record, const Lexicon& lexicon) {
  if (record.vectorized() || record.term_form() != TermForm::kText) {
    throw InvalidInputError("normalize expects a record of plain strings");
  }
  AddressRecord out = record;
  StringList cleaned;
  for (const std::string& s : record.strings(FieldKey::kAddress)) {
    std::string n = normalize_text(s, lexicon);
    if (!n.empty()) cleaned.push_back(std::move(n));
  }
  out.set(FieldKey::kAddress, std::move(cleaned));
  return out;
}

}  // namespace addrmatch
