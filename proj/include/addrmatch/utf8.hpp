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

#ifndef ADDRMATCH_UTF8_HPP_
#define ADDRMATCH_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace addrmatch::utf8 {

// Decodes UTF-8 into code points. Invalid sequences decode byte-by-byte as
// U+FFFD so that every input has a well-defined length.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);

// Number of code points in `text`.
std::size_t length(std::string_view text);

}  // namespace addrmatch::utf8

#endif  // ADDRMATCH_UTF8_HPP_
