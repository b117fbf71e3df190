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

#ifndef ADDRMATCH_GENERATOR_HPP_
#define ADDRMATCH_GENERATOR_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addrmatch/city_table.hpp"
#include "addrmatch/dataset.hpp"
#include "addrmatch/record.hpp"
#include "addrmatch/rng.hpp"

namespace addrmatch {

// ---------------------------------------------------------------------------
// Word lists

enum class PrefixKind : std::uint8_t { kApartment, kFloor, kName };

// APT APARTMENT SUITE STE UNIT / FLOOR LEVEL / ATTN C/O
std::span<const std::string_view> prefix_words(PrefixKind kind);
std::optional<PrefixKind> prefix_kind_of(std::string_view word);

// {APT, APARTMENT} {SUITE, STE} {ROAD, RD} {STREET, ST} {AVE, AVENUE}
using SubstitutionGroup = std::array<std::string_view, 2>;
std::span<const SubstitutionGroup> substitution_groups();
const SubstitutionGroup* substitution_group_of(std::string_view word);

// Uppercase name words used for street names and person names.
std::span<const std::string_view> name_words();
// ST AVE RD CT BLVD LN DR
std::span<const std::string_view> street_suffixes();

// ---------------------------------------------------------------------------
// Addresses

// <building, street name, city, state>. The street name is one name word
// followed by a street-type suffix.
struct BaseAddress {
  int building_number = 1;
  std::string street_name;
  std::string city;
  std::string state;

  std::string to_string() const;
  bool same_location(const BaseAddress& other) const;
  bool operator==(const BaseAddress&) const = default;
};

enum class TokenRole : std::uint8_t {
  kPrefixWord,   // APT, FLOOR, ATTN, ...
  kPrefixValue,  // unit or floor number
  kPersonName,
  kBuilding,
  kStreet,       // street name words and suffix
  kCity,
  kState,
};

struct AddressToken {
  std::string text;
  TokenRole role;

  bool operator==(const AddressToken&) const = default;
};

// A generated address as a sequence of role-tagged tokens. Transformations
// operate on this form; the string forms are parsed into it.
class AddressLayout {
 public:
  AddressLayout() = default;
  explicit AddressLayout(std::vector<AddressToken> tokens)
      : tokens_(std::move(tokens)) {}

  static AddressLayout from_base(const BaseAddress& base);

  // Recovers roles from a generated address string. The building number is
  // the first all-digit token followed by a non-digit token; (city, state)
  // is the longest suffix found in `cities` (case-insensitive); a
  // unit/floor prefix word plus number directly after the street is a
  // permuted prefix. Throws InvalidInputError when no building number is
  // present.
  static AddressLayout parse(std::string_view address, const CityTable& cities);

  std::string render() const;

  const std::vector<AddressToken>& tokens() const { return tokens_; }
  std::vector<AddressToken>& tokens() { return tokens_; }

  // Index range [first, last) of the contiguous run of `role` tokens, if any.
  std::optional<std::pair<std::size_t, std::size_t>> span_of(
      TokenRole role) const;
  // Texts of all tokens with `role`, joined with single spaces.
  std::string text_of(TokenRole role) const;

  bool operator==(const AddressLayout&) const = default;

 private:
  std::vector<AddressToken> tokens_;
};

// ---------------------------------------------------------------------------
// Generation

struct GeneratorConfig {
  std::uint64_t n_base = 10000;
  std::uint64_t seed = 0;
  // Unset selects the bundled 1,000-row table.
  std::optional<std::filesystem::path> city_table_path;
  double train_ratio = 0.8;
  double valid_ratio = 0.1;
  double test_ratio = 0.1;
};

// Throws InvalidInputError when n_base is zero or the ratios are negative or
// do not sum to 1.
void validate_generator_config(const GeneratorConfig& config);

// Building numbers uniform in [1, 9999]; (city, state) drawn as a table row.
std::vector<BaseAddress> generate_base_addresses(std::uint64_t n_base,
                                                 const CityTable& cities,
                                                 Rng& rng);

// Prepends a uniformly chosen prefix kind: an apartment word with a number
// in [1, 999], a floor word with a number in [1, 99], or ATTN / C/O with a
// two-word person name.
AddressLayout add_prefix(const BaseAddress& base, Rng& rng);

// Match-preserving transformations. Each degrades to identity when its
// precondition does not hold.
enum class MatchOp : std::uint8_t {
  kWordSubstitute,
  kWordDelete,
  kCharAdd,
  kCharDelete,
  kPermute,
};
inline constexpr std::array<MatchOp, 5> kAllMatchOps = {
    MatchOp::kWordSubstitute, MatchOp::kWordDelete, MatchOp::kCharAdd,
    MatchOp::kCharDelete, MatchOp::kPermute};

// Mismatch-producing transformations.
enum class MismatchOp : std::uint8_t {
  kBuildingRedirect,
  kStreetRedirect,
  kCityRedirect,
  kPoolSwap,
};
inline constexpr std::array<MismatchOp, 4> kAllMismatchOps = {
    MismatchOp::kBuildingRedirect, MismatchOp::kStreetRedirect,
    MismatchOp::kCityRedirect, MismatchOp::kPoolSwap};

std::string_view match_op_name(MatchOp op);
std::string_view mismatch_op_name(MismatchOp op);

// Replaces one substitutable prefix word or street suffix by the other word
// of its substitution group.
AddressLayout word_substitute(AddressLayout address, Rng& rng);
// Drops one prefix word or unit/floor number. Person names, street words and
// the building number are never dropped.
AddressLayout word_delete(AddressLayout address, Rng& rng);
// Inserts one character from [A-Z0-9] at a position inside a street token.
AddressLayout char_add(AddressLayout address, Rng& rng);
// Removes one character from a street token of length >= 2.
AddressLayout char_delete(AddressLayout address, Rng& rng);
// Moves a leading "<unit|floor word> <number>" block to just after the
// street name.
AddressLayout permute(AddressLayout address);
// Building number +/- delta, delta uniform in [1, 10], result >= 1 and
// different from the original.
AddressLayout building_redirect(AddressLayout address, Rng& rng);
// Replaces the street with a freshly drawn, different street name.
AddressLayout street_redirect(AddressLayout address, Rng& rng);
// Replaces (city, state) with a different row of `cities`.
AddressLayout city_redirect(AddressLayout address, const CityTable& cities,
                            Rng& rng);

AddressLayout apply_match_op(MatchOp op, AddressLayout address, Rng& rng);

// String forms of the transformations above: parse, transform, render.
std::string add_prefix_string(const BaseAddress& base, Rng& rng);
std::string word_substitute(std::string_view address, const CityTable& cities,
                            Rng& rng);
std::string word_delete(std::string_view address, const CityTable& cities,
                        Rng& rng);
std::string char_add(std::string_view address, const CityTable& cities,
                     Rng& rng);
std::string char_delete(std::string_view address, const CityTable& cities,
                        Rng& rng);
std::string permute(std::string_view address, const CityTable& cities);
std::string building_redirect(std::string_view address,
                              const CityTable& cities, Rng& rng);
std::string street_redirect(std::string_view address, const CityTable& cities,
                            Rng& rng);
std::string city_redirect(std::string_view address, const CityTable& cities,
                          Rng& rng);

// How a pair was produced; kept in memory only, never serialized.
struct PairTrace {
  std::string a1_op;
  std::string a2_op;
  // For mismatches: which side was transformed (1 or 2), and the pool index
  // of the replacement base when the pool swap was chosen.
  int transformed_side = 0;
  std::optional<std::size_t> swapped_with;
};

struct GeneratedPair {
  LabeledPair pair;
  PairTrace trace;
};

// Prefixes the base twice, then applies one independently chosen match op to
// each side. Label 1.
GeneratedPair generate_match_pair(const BaseAddress& base, Rng& rng);

// Prefixes the base twice, then transforms one randomly chosen side with a
// building/street/city redirect or replaces it with another (re-prefixed)
// pool base. Label 0. Throws InvalidInputError when the pool has fewer than
// two elements or no element at a different location than `base`.
GeneratedPair generate_mismatch_pair(const BaseAddress& base,
                                     std::span<const BaseAddress> pool,
                                     const CityTable& cities, Rng& rng);

struct GeneratedDataset {
  Dataset dataset;
  std::vector<PairTrace> traces;  // parallel to dataset.pairs
};

// n_base match pairs then n_base mismatch pairs, shuffled and split
// train/valid/test. The random stream is consumed in this order: base
// addresses, match pairs (in base order), mismatch pairs (in base order),
// shuffle.
GeneratedDataset build_dataset_traced(const GeneratorConfig& config,
                                      const CityTable& cities);
Dataset build_dataset(const GeneratorConfig& config, const CityTable& cities);
// Loads the table named by config.city_table_path, or the bundled one.
Dataset build_dataset(const GeneratorConfig& config);

}  // namespace addrmatch

#endif  // ADDRMATCH_GENERATOR_HPP_
