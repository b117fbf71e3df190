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
#include "addrmatch/utf8.hpp"

namespace addrmatch {

namespace {

void require_strings(const AddressRecord& record, TermForm forbidden,
                     std::string_view op) {
  if (record.vectorized()) {
    throw InvalidInputError(std::string(op) + " expects string values");
  }
  if (record.term_form() == forbidden) {
    throw InvalidInputError(std::string(op) +
                            ": tokens and n-grams cannot be combined");
  }
}

template <class Fn>
AddressRecord map_strings(const AddressRecord& record, Fn&& fn) {
  AddressRecord out = record;
  for (FieldKey key : kAllFieldKeys) {
    StringList mapped;
    for (const std::string& s : record.strings(key)) {
      for (std::string& piece : fn(s)) {
        if (!piece.empty()) mapped.push_back(std::move(piece));
      }
    }
    out.set(key, std::move(mapped));
  }
  return out;
}

}  // namespace

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

AddressRecord tokens(const AddressRecord& record) {
  require_strings(record, TermForm::kNgrams, "tokens");
  AddressRecord out = map_strings(record, split_tokens);
  out.set_term_form(TermForm::kTokens);
  return out;
}

std::vector<std::string> char_ngrams(std::string_view text, std::size_t n) {
  if (n < 1) throw InvalidInputError("n-gram size must be at least 1");
  const std::u32string cps = utf8::decode(text);
  std::vector<std::string> out;
  if (cps.empty()) return out;
  if (cps.size() < n) {
    out.push_back(utf8::encode(cps));
    return out;
  }
  out.reserve(cps.size() - n + 1);
  for (std::size_t i = 0; i + n <= cps.size(); ++i) {
    out.push_back(utf8::encode(std::u32string_view(cps).substr(i, n)));
  }
  return out;
}

AddressRecord ngrams(const AddressRecord& record, std::size_t n) {
  if (n < 1) throw InvalidInputError("n-gram size must be at least 1");
  require_strings(record, TermForm::kTokens, "ngrams");
  AddressRecord out = map_strings(
      record, [n](const std::string& s) { return char_ngrams(s, n); });
  out.set_term_form(TermForm::kNgrams);
  return out;
}

}  // namespace addrmatch
