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

#ifndef ADDRMATCH_TESTS_FIXTURES_HPP_
#define ADDRMATCH_TESTS_FIXTURES_HPP_

#include <memory>
#include <random>
#include <string>
#include <string_view>

#include "addrmatch/bundled_data.hpp"
#include "addrmatch/city_table.hpp"
#include "addrmatch/lexicon.hpp"
#include "addrmatch/pipeline.hpp"

namespace addrmatch::testing {

// The bundled table plus the small cities used in hand-written examples.
inline const CityTable& example_cities() {
  static const CityTable table = CityTable::parse(
      std::string(bundled_city_csv()) + "\nLIMA,OH\n", "<bundled+examples>");
  return table;
}

inline std::shared_ptr<const Resources> example_resources() {
  static const auto resources =
      std::make_shared<const Resources>(Lexicon::bundled(), example_cities());
  return resources;
}

// Uniform string of length [0, max_len] over `alphabet`.
inline std::string random_string(std::mt19937_64& gen, std::size_t max_len,
                                  std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string out;
  const std::size_t n = len(gen);
  for (std::size_t i = 0; i < n; ++i) out.push_back(alphabet[pick(gen)]);
  return out;
}

}  // namespace addrmatch::testing

#endif  // ADDRMATCH_TESTS_FIXTURES_HPP_
