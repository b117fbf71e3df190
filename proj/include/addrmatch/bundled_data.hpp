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

#ifndef ADDRMATCH_BUNDLED_DATA_HPP_
#define ADDRMATCH_BUNDLED_DATA_HPP_

#include <string_view>

namespace addrmatch {

// Top-1000 US cities by population, "City,State" CSV with header.
std::string_view bundled_city_csv();

// Normalization lexicon, "SURFACE<TAB>TAG<TAB>FIELDHINT" lines.
std::string_view bundled_lexicon_tsv();

}  // namespace addrmatch

#endif  // ADDRMATCH_BUNDLED_DATA_HPP_
