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

#ifndef ADDRMATCH_RECORD_HPP_
#define ADDRMATCH_RECORD_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace addrmatch {

// The fourteen keys an address record can carry. No other keys exist.
enum class FieldKey : std::uint8_t {
  kAddress,
  kPerson,
  kUnit,
  kFloor,
  kHouse,
  kAreaDistrict,
  kPOBox,
  kStreet,
  kStreetNumber,
  kStreetName,
  kPostCode,
  kCity,
  kCountyState,
  kCountry,
};

inline constexpr std::size_t kFieldKeyCount = 14;

inline constexpr std::array<FieldKey, kFieldKeyCount> kAllFieldKeys = {
    FieldKey::kAddress,      FieldKey::kPerson,     FieldKey::kUnit,
    FieldKey::kFloor,        FieldKey::kHouse,      FieldKey::kAreaDistrict,
    FieldKey::kPOBox,        FieldKey::kStreet,     FieldKey::kStreetNumber,
    FieldKey::kStreetName,   FieldKey::kPostCode,   FieldKey::kCity,
    FieldKey::kCountyState,  FieldKey::kCountry,
};

std::string_view field_key_name(FieldKey key);
std::optional<FieldKey> parse_field_key(std::string_view name);

// tf-idf weights for the terms of one value-list. Sorted by term so that
// dot products are evaluated in a canonical order.
struct TermVector {
  std::map<std::string, double> weights;
  // Identifies the TfidfModel that produced the vector; vectors from
  // different models are not comparable.
  std::uint64_t model_id = 0;

  bool operator==(const TermVector&) const = default;
};

using StringList = std::vector<std::string>;
using VectorList = std::vector<TermVector>;
using ValueList = std::variant<StringList, VectorList>;

// Which representation the string values of a record are in. Tokens and
// n-grams are mutually exclusive for the whole record.
enum class TermForm : std::uint8_t { kText, kTokens, kNgrams };

// A keyed field map holding one address at some stage of representation
// change. Every key is always present; absence of information is an empty
// list. Value-lists keep insertion order.
class AddressRecord {
 public:
  AddressRecord();

  const ValueList& values(FieldKey key) const {
    return entries_[static_cast<std::size_t>(key)];
  }
  // Throws InvalidInputError when the key holds term vectors.
  const StringList& strings(FieldKey key) const;
  bool is_empty(FieldKey key) const;

  void set(FieldKey key, ValueList values);

  // Keys whose value-list is non-empty, in FieldKey order.
  std::vector<FieldKey> populated_keys() const;

  TermForm term_form() const { return term_form_; }
  void set_term_form(TermForm form) { term_form_ = form; }
  bool vectorized() const { return vectorized_; }
  void set_vectorized(bool v) { vectorized_ = v; }

  bool operator==(const AddressRecord&) const = default;

 private:
  std::array<ValueList, kFieldKeyCount> entries_;
  TermForm term_form_ = TermForm::kText;
  bool vectorized_ = false;
};

// {Address: [raw]}. Throws InvalidInputError on an empty string.
AddressRecord make_record(std::string_view raw);

enum class Split : std::uint8_t { kTrain, kValid, kTest };

std::string_view split_name(Split split);
std::optional<Split> parse_split(std::string_view name);

// Two raw addresses, a match (1) or mismatch (0) label, and the split the
// pair was assigned to.
struct LabeledPair {
  std::string a1;
  std::string a2;
  int label = 0;
  Split split = Split::kTrain;

  bool operator==(const LabeledPair&) const = default;
};

// Throws InvalidInputError if a1/a2 are empty or label is not 0/1.
void validate_pair(const LabeledPair& pair);

}  // namespace addrmatch

#endif  // ADDRMATCH_RECORD_HPP_
