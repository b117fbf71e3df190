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

#ifndef ADDRMATCH_REPRESENTATION_HPP_
#define ADDRMATCH_REPRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "addrmatch/lexicon.hpp"
#include "addrmatch/record.hpp"

namespace addrmatch {

// Cleans one address string: drops non-ASCII bytes (canonical tags are
// kept), removes periods, turns ';' into ',', strips other punctuation runs,
// rewrites ordinals ("3rd" -> "3") and replaces lexicon surface forms by
// their tags. Output tokens are single-space separated, commas attach to the
// preceding token. Idempotent.
std::string normalize_text(std::string_view text, const Lexicon& lexicon);

// Replaces every Address string by its normalized form.
AddressRecord normalize(const AddressRecord& record, const Lexicon& lexicon);

// Whitespace tokens of `text` with delimiter commas removed.
std::vector<std::string> split_tokens(std::string_view text);

// Each key's strings replaced by their tokens, order preserved.
AddressRecord tokens(const AddressRecord& record);

// Overlapping character n-grams (code points). Strings shorter than n yield
// themselves; the empty string yields nothing. Throws InvalidInputError for
// n < 1.
std::vector<std::string> char_ngrams(std::string_view text, std::size_t n);

// Each key's strings replaced by their character n-grams.
AddressRecord ngrams(const AddressRecord& record, std::size_t n = 3);

}  // namespace addrmatch

#endif  // ADDRMATCH_REPRESENTATION_HPP_
