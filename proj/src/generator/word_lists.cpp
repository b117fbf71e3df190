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

#include "addrmatch/generator.hpp"

#include <algorithm>
#include <array>

namespace addrmatch {

namespace {

constexpr std::array<std::string_view, 5> kApartmentWords = {
    "APT", "APARTMENT", "SUITE", "STE", "UNIT"};
constexpr std::array<std::string_view, 2> kFloorWords = {"FLOOR", "LEVEL"};
constexpr std::array<std::string_view, 2> kNameWords = {"ATTN", "C/O"};

constexpr std::array<SubstitutionGroup, 5> kSubstitutionGroups = {{
    {"APT", "APARTMENT"},
    {"SUITE", "STE"},
    {"ROAD", "RD"},
    {"STREET", "ST"},
    {"AVE", "AVENUE"},
}};

constexpr std::array<std::string_view, 7> kStreetSuffixes = {
    "ST", "AVE", "RD", "CT", "BLVD", "LN", "DR"};

// Disjoint from every prefix word, street suffix and lexicon surface.
constexpr std::array<std::string_view, 200> kNames = {
    "ABBOTT", "ACORN", "ADAMS", "ALDER", "ALLEN", "ANDERSON", "ARBOR", "ASHBY",
    "ASPEN", "AUBURN", "AVERY", "BAKER", "BARNES", "BARTON", "BAXTER", "BEACON",
    "BECKETT", "BEECH", "BENNETT", "BIRCH", "BISHOP", "BLAIR", "BOONE", "BRADLEY",
    "BRIAR", "BROOKS", "BRYANT", "BUCKLEY", "BURTON", "CALDWELL", "CAMDEN", "CARLISLE",
    "CARTER", "CEDAR", "CHAPMAN", "CHERRY", "CHESTNUT", "CLARK", "CLAYTON", "COLLINS",
    "COOPER", "CRANE", "CURTIS", "DALTON", "DAWSON", "DEAN", "DELANEY", "DEXTER",
    "DIXON", "DOYLE", "DUDLEY", "DUNCAN", "DURHAM", "EATON", "ELDER", "ELLIS",
    "ELM", "EMERSON", "EVANS", "FAIRFAX", "FARLEY", "FENWICK", "FERN", "FINCH",
    "FISHER", "FLETCHER", "FORD", "FOSTER", "FOWLER", "FULLER", "GARDNER", "GARLAND",
    "GIBSON", "GILBERT", "GORDON", "GRAHAM", "GRANT", "GREER", "GRIFFIN", "HALE",
    "HAMMOND", "HARDY", "HARPER", "HARRIS", "HAWKINS", "HAYES", "HAZEL", "HENSON",
    "HICKORY", "HOLLAND", "HOLLIS", "HOLLOW", "HOPKINS", "HOWARD", "HUDSON", "HUNTER",
    "INGRAM", "IRVING", "IVY", "JAMES", "JARVIS", "JENKINS", "JORDAN", "KEATON",
    "KELLER", "KENDALL", "KERR", "KIMBALL", "KINGSLEY", "KIRBY", "KNOX", "LAMBERT",
    "LANGLEY", "LARCH", "LAUREL", "LAWSON", "LEWIS", "LINDEN", "LLOYD", "LOCUST",
    "LOGAN", "LOWELL", "MADDOX", "MAGNOLIA", "MAPLE", "MARSH", "MARTIN", "MASON",
    "MAXWELL", "MEADOW", "MERCER", "MERRITT", "MILLER", "MONROE", "MORGAN", "MORRIS",
    "MYRTLE", "NASH", "NELSON", "NEWTON", "NOBLE", "NORRIS", "OAK", "OLIVER",
    "OSBORNE", "OWEN", "PARKER", "PATTON", "PAXTON", "PEARSON", "PECAN", "PIERCE",
    "PINE", "PORTER", "PRATT", "PRESTON", "QUINN", "RAMSEY", "RANDALL", "REED",
    "REYNOLDS", "RIDGE", "ROWAN", "RUSSELL", "RUTLEDGE", "SAWYER", "SHELBY", "SHERMAN",
    "SIMMONS", "SPRUCE", "STANTON", "STERLING", "SULLIVAN", "SUMMIT", "SUTTON", "SYCAMORE",
    "TALBOT", "TAYLOR", "THORNTON", "TUCKER", "TURNER", "VANCE", "VAUGHN", "WALKER",
    "WALLACE", "WALNUT", "WARD", "WARNER", "WATSON", "WEBSTER", "WHEELER", "WHITNEY",
    "WILLOW", "WINSLOW", "WOOD", "WRIGHT", "YATES", "YORK", "YOUNG", "ZIMMER",
};

}  // namespace

std::span<const std::string_view> prefix_words(PrefixKind kind) {
  switch (kind) {
    case PrefixKind::kApartment:
      return kApartmentWords;
    case PrefixKind::kFloor:
      return kFloorWords;
    case PrefixKind::kName:
      return kNameWords;
  }
  return {};
}

std::optional<PrefixKind> prefix_kind_of(std::string_view word) {
  for (PrefixKind kind :
       {PrefixKind::kApartment, PrefixKind::kFloor, PrefixKind::kName}) {
    const auto words = prefix_words(kind);
    if (std::find(words.begin(), words.end(), word) != words.end()) {
      return kind;
    }
  }
  return std::nullopt;
}

std::span<const SubstitutionGroup> substitution_groups() {
  return kSubstitutionGroups;
}

const SubstitutionGroup* substitution_group_of(std::string_view word) {
  for (const SubstitutionGroup& group : kSubstitutionGroups) {
    if (group[0] == word || group[1] == word) return &group;
  }
  return nullptr;
}

std::span<const std::string_view> name_words() { return kNames; }

std::span<const std::string_view> street_suffixes() { return kStreetSuffixes; }

}  // namespace addrmatch
