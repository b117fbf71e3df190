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

#ifndef ADDRMATCH_LEXICON_HPP_
#define ADDRMATCH_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "addrmatch/record.hpp"

namespace addrmatch {

// Canonical tags are rendered as "⟨Name⟩" where Name comes from a closed set
// (Street, Floor, West, ...).
std::span<const std::string_view> canonical_tag_names();
bool is_canonical_tag_name(std::string_view name);
std::string make_tag(std::string_view name);
// True for "⟨Name⟩" with Name in the closed set.
bool is_tag_token(std::string_view token);

struct LexiconEntry {
  std::vector<std::string> surface;  // uppercase words, e.g. {"PO", "BOX"}
  std::string tag;                   // rendered, e.g. "⟨POBox⟩"
  std::optional<FieldKey> hint;      // field the term refers to, if any
};

// Surface forms of address terms and their canonical tags. Loaded from
// "SURFACE<TAB>TAG<TAB>FIELDHINT" lines; '#' starts a comment line and a
// field hint of "-" means none.
class Lexicon {
 public:
  // Throws IngestionError on malformed lines, tags outside the closed set,
  // unknown field hints, or duplicate surfaces.
  static Lexicon parse(std::string_view tsv, std::string source);
  static Lexicon load(const std::filesystem::path& path);
  static const Lexicon& bundled();

  // Longest entry whose surface equals upper_words[pos, pos + n). Words must
  // already be uppercase.
  const LexiconEntry* longest_match(std::span<const std::string> upper_words,
                                    std::size_t pos) const;

  // Field hint of a rendered tag; nullopt for unknown tags and for tags
  // without a hint (directionals).
  std::optional<FieldKey> hint_for_tag(std::string_view tag) const;
  // Field hint of a single-word surface, case-insensitive.
  std::optional<FieldKey> hint_for_word(std::string_view word) const;

  std::span<const LexiconEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const std::string& source() const { return source_; }

 private:
  std::vector<LexiconEntry> entries_;
  // first surface word -> entry indices, longest surface first
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_word_;
  std::unordered_map<std::string, std::optional<FieldKey>> tag_hints_;
  std::string source_;
};

}  // namespace addrmatch

#endif  // ADDRMATCH_LEXICON_HPP_
