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

#include "addrmatch/record.hpp"

#include "addrmatch/error.hpp"

namespace addrmatch {

namespace {

constexpr std::array<std::string_view, kFieldKeyCount> kFieldKeyNames = {
    "Address", "Person",      "Unit",       "Floor",     "House",
    "AreaDistrict", "POBox",  "Street",     "StreetNumber", "StreetName",
    "PostCode", "City",       "CountyState", "Country",
};

bool list_empty(const ValueList& values) {
  return std::visit([](const auto& list) { return list.empty(); }, values);
}

}  // namespace

std::string_view field_key_name(FieldKey key) {
  return kFieldKeyNames[static_cast<std::size_t>(key)];
}

std::optional<FieldKey> parse_field_key(std::string_view name) {
  for (std::size_t i = 0; i < kFieldKeyNames.size(); ++i) {
    if (kFieldKeyNames[i] == name) return kAllFieldKeys[i];
  }
  return std::nullopt;
}

AddressRecord::AddressRecord() {
  entries_.fill(StringList{});
}

const StringList& AddressRecord::strings(FieldKey key) const {
  const auto* list = std::get_if<StringList>(&values(key));
  if (list == nullptr) {
    throw InvalidInputError("field " + std::string(field_key_name(key)) +
                            " holds term vectors, not strings");
  }
  return *list;
}

bool AddressRecord::is_empty(FieldKey key) const {
  return list_empty(values(key));
}

void AddressRecord::set(FieldKey key, ValueList values) {
  entries_[static_cast<std::size_t>(key)] = std::move(values);
}

std::vector<FieldKey> AddressRecord::populated_keys() const {
  std::vector<FieldKey> keys;
  for (FieldKey key : kAllFieldKeys) {
    if (!is_empty(key)) keys.push_back(key);
  }
  return keys;
}

AddressRecord make_record(std::string_view raw) {
  if (raw.empty()) throw InvalidInputError("address must be non-empty");
  AddressRecord record;
  record.set(FieldKey::kAddress, StringList{std::string(raw)});
  return record;
}

std::string_view split_name(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValid:
      return "valid";
    case Split::kTest:
      return "test";
  }
  return "test";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "valid") return Split::kValid;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

void validate_pair(const LabeledPair& pair) {
  if (pair.a1.empty() || pair.a2.empty()) {
    throw InvalidInputError("pair addresses must be non-empty");
  }
  if (pair.label != 0 && pair.label != 1) {
    throw InvalidInputError("pair label must be 0 or 1");
  }
}

}  // namespace addrmatch
