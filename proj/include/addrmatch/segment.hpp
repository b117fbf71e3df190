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

#ifndef ADDRMATCH_SEGMENT_HPP_
#define ADDRMATCH_SEGMENT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "addrmatch/city_table.hpp"
#include "addrmatch/lexicon.hpp"
#include "addrmatch/record.hpp"

namespace addrmatch {

// Recognizes "<city> <state>" at the end of a token sequence. Every table
// row is compiled in both raw and normalized spelling, so the matcher works
// before and after normalization. Longest city wins.
class CityMatcher {
 public:
  CityMatcher(const CityTable& cities, const Lexicon& lexicon);

  struct Match {
    std::size_t city_first;  // index of the first city token
    std::size_t city_last;   // one past the last city token
    std::size_t state;       // index of the state token
  };

  // `tokens` are compared case-insensitively; comma tokens (",") between
  // the city and the state, and after the state, are skipped. Only the
  // prefix [0, end) of `tokens` is considered.
  std::optional<Match> match_suffix(std::span<const std::string> tokens,
                                    std::size_t end) const;

 private:
  // uppercase state token -> city spellings (uppercase tokens), longest first
  std::unordered_map<std::string, std::vector<std::vector<std::string>>>
      by_state_;
};

// Rule-based field extraction. Tokens are consumed in this order:
//   1. Person: words after an Attn/CareOf tag.
//   2. PostCode and Country at the very end, then City/CountyState by
//      longest suffix match against the city table.
//   3. StreetNumber/StreetName: the first number followed by a street word;
//      the name runs to the first street-type tag (plus a trailing
//      directional) or to the next consumed token, number, comma, or
//      non-street tag.
//   4. Unit and Floor: the number after (else before) a unit/floor tag.
//   5. POBox: the number after a POBox tag.
//   6. House: words before a building tag, plus the tag.
// Whatever is left stays under Address as contiguous residue spans. Text is
// never invented: alphanumerics outside tags are conserved.
class Segmenter {
 public:
  Segmenter(const Lexicon& lexicon, const CityTable& cities);

  AddressRecord operator()(const AddressRecord& record) const;

 private:
  Lexicon lexicon_;
  CityMatcher cities_;
};

// Throws InvalidInputError when the record is tokenized, n-grammed, or
// vectorized.
AddressRecord segment(const AddressRecord& record, const Segmenter& segmenter);

}  // namespace addrmatch

#endif  // ADDRMATCH_SEGMENT_HPP_
