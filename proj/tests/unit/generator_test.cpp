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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "addrmatch/error.hpp"
#include "addrmatch/generator.hpp"
#include "fixtures.hpp"

namespace addrmatch {
namespace {

using testing::example_cities;

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

BaseAddress lima_base() { return {123, "ABC CT", "LIMA", "OH"}; }

TEST(CityTable, BundledHasThousandRows) {
  const CityTable& t = CityTable::bundled();
  EXPECT_EQ(t.size(), 1000u);
  EXPECT_TRUE(t.contains("Reno", "nv"));
  EXPECT_TRUE(t.contains("ATLANTA", "GA"));
  for (const CityEntry& row : t.rows()) {
    ASSERT_EQ(row.state.size(), 2u);
    ASSERT_FALSE(row.city.empty());
  }
}

TEST(CityTable, IngestionErrors) {
  EXPECT_THROW(CityTable::load("/nonexistent/cities.csv"), IngestionError);
  EXPECT_THROW(CityTable::parse("Town,Region\nA,BC\n", "t"), IngestionError);
  EXPECT_THROW(CityTable::parse("City,State\nLIMA,OHIO\n", "t"), IngestionError);
  EXPECT_THROW(CityTable::parse("City,State\n", "t"), IngestionError);
  EXPECT_THROW(CityTable::parse("", "t"), IngestionError);
  const CityTable t = CityTable::parse("City,State\r\n  lima ,oh\r\n", "t");
  EXPECT_EQ(t.rows().front(), (CityEntry{"LIMA", "OH"}));
}

TEST(WordLists, PrefixListsAsTabled) {
  const auto apt = prefix_words(PrefixKind::kApartment);
  EXPECT_EQ(std::vector<std::string_view>(apt.begin(), apt.end()),
            (std::vector<std::string_view>{"APT", "APARTMENT", "SUITE", "STE", "UNIT"}));
  const auto floor = prefix_words(PrefixKind::kFloor);
  EXPECT_EQ(std::vector<std::string_view>(floor.begin(), floor.end()),
            (std::vector<std::string_view>{"FLOOR", "LEVEL"}));
  const auto name = prefix_words(PrefixKind::kName);
  EXPECT_EQ(std::vector<std::string_view>(name.begin(), name.end()),
            (std::vector<std::string_view>{"ATTN", "C/O"}));
}

TEST(WordLists, SubstitutionGroupsDisjoint) {
  std::set<std::string_view> seen;
  for (const auto& group : substitution_groups()) {
    EXPECT_TRUE(seen.insert(group[0]).second);
    EXPECT_TRUE(seen.insert(group[1]).second);
  }
  EXPECT_EQ(seen.size(), 10u);
  EXPECT_EQ(substitution_group_of("UNIT"), nullptr);
}

TEST(WordLists, NameWordsAreDistinctFromVocabulary) {
  const auto names = name_words();
  EXPECT_EQ(names.size(), 200u);
  std::set<std::string_view> unique(names.begin(), names.end());
  EXPECT_EQ(unique.size(), names.size());
  for (std::string_view w : names) {
    EXPECT_FALSE(prefix_kind_of(w)) << w;
    EXPECT_EQ(substitution_group_of(w), nullptr) << w;
    EXPECT_FALSE(Lexicon::bundled().hint_for_word(w)) << w;
  }
}

TEST(BaseAddresses, DeterministicAndFromTable) {
  Rng r1(9), r2(9);
  const auto a = generate_base_addresses(1, CityTable::bundled(), r1);
  const auto b = generate_base_addresses(1, CityTable::bundled(), r2);
  EXPECT_EQ(a, b);

  Rng rng(1);
  for (const BaseAddress& base :
       generate_base_addresses(2000, CityTable::bundled(), rng)) {
    ASSERT_TRUE(CityTable::bundled().contains(base.city, base.state));
    ASSERT_GE(base.building_number, 1);
    ASSERT_LE(base.building_number, 9999);
    ASSERT_EQ(words(base.street_name).size(), 2u);
  }
}

TEST(AddPrefix, ShapesMatchPrefixKind) {
  Rng rng(3);
  std::set<std::string> seen_words;
  for (int i = 0; i < 10000; ++i) {
    const std::string s = add_prefix_string(lima_base(), rng);
    ASSERT_TRUE(s.ends_with(" 123 ABC CT LIMA OH")) << s;
    const auto w = words(s);
    const auto kind = prefix_kind_of(w[0]);
    ASSERT_TRUE(kind) << s;
    seen_words.insert(w[0]);
    if (*kind == PrefixKind::kName) {
      ASSERT_EQ(w.size(), 8u) << s;
      ASSERT_TRUE(std::find(name_words().begin(), name_words().end(), w[1]) !=
                  name_words().end());
    } else {
      ASSERT_EQ(w.size(), 7u) << s;
      const int n = std::stoi(w[1]);
      ASSERT_GE(n, 1);
      ASSERT_LE(n, *kind == PrefixKind::kFloor ? 99 : 999);
    }
  }
  EXPECT_EQ(seen_words.size(), 9u);
}

TEST(WordSubstitute, SwapsGroupPartner) {
  Rng rng(0);
  EXPECT_EQ(word_substitute("STE 17 123 ABC CT LIMA OH", example_cities(), rng),
            "SUITE 17 123 ABC CT LIMA OH");
  EXPECT_EQ(word_substitute("UNIT 12 123 ABC CT LIMA OH", example_cities(), rng),
            "UNIT 12 123 ABC CT LIMA OH");
}

TEST(WordSubstitute, PreservesTokenCount) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::string in = add_prefix_string(
        {40, "OAK ST", "RENO", "NV"}, rng);
    const std::string out = word_substitute(in, example_cities(), rng);
    ASSERT_EQ(words(in).size(), words(out).size()) << in;
  }
}

TEST(WordDelete, DropsPrefixTokenOnly) {
  Rng rng(0);
  EXPECT_EQ(word_delete("ATTN JOE 123 ABC CT LIMA OH", example_cities(), rng),
            "JOE 123 ABC CT LIMA OH");
  std::set<std::string> outcomes;
  for (int i = 0; i < 50; ++i) {
    outcomes.insert(
        word_delete("STE 17 123 ABC CT LIMA OH", example_cities(), rng));
  }
  EXPECT_EQ(outcomes, (std::set<std::string>{"STE 123 ABC CT LIMA OH",
                                             "17 123 ABC CT LIMA OH"}));
}

TEST(CharAdd, EditStaysInStreetName) {
  Rng rng(11);
  const std::string in = "APT 3 123 ABC CT LIMA OH";
  for (int i = 0; i < 500; ++i) {
    const std::string out = char_add(in, example_cities(), rng);
    ASSERT_EQ(out.size(), in.size() + 1);
    ASSERT_TRUE(out.starts_with("APT 3 123 ")) << out;
    ASSERT_TRUE(out.ends_with(" CT LIMA OH")) << out;
    const std::string name = out.substr(10, out.size() - 10 - 11);
    ASSERT_EQ(name.size(), 4u);
    bool one_insert = false;
    for (std::size_t k = 0; k < name.size(); ++k) {
      one_insert |= std::string(name).erase(k, 1) == "ABC";
    }
    ASSERT_TRUE(one_insert) << out;
  }
}

TEST(CharDelete, CityAndStateUntouched) {
  Rng rng(12);
  Rng gen(99);
  for (int i = 0; i < 2000; ++i) {
    const auto base =
        generate_base_addresses(1, CityTable::bundled(), gen).front();
    const std::string in = add_prefix_string(base, gen);
    const std::string out = char_delete(in, CityTable::bundled(), rng);
    ASSERT_EQ(out.size() + 1, in.size()) << in;
    const std::string tail = " " + base.city + " " + base.state;
    ASSERT_TRUE(out.ends_with(tail)) << out;
    ASSERT_NE(out.find(" " + std::to_string(base.building_number) + " "),
              std::string::npos);
  }
}

TEST(Permute, MovesUnitOrFloorBlock) {
  const CityTable& cities = example_cities();
  EXPECT_EQ(permute("FLOOR 3 123 ABC Ct", cities), "123 ABC Ct FLOOR 3");
  EXPECT_EQ(permute("APARTMENT 15 123 ABC Ct", cities),
            "123 ABC Ct APARTMENT 15");
  EXPECT_EQ(permute("APT 3 123 ABC CT LIMA OH", cities),
            "123 ABC CT APT 3 LIMA OH");
  EXPECT_EQ(permute("123 ABC Ct FLOOR 3", cities), "123 ABC Ct FLOOR 3");
  EXPECT_EQ(permute("ATTN JOE 123 ABC CT LIMA OH", cities),
            "ATTN JOE 123 ABC CT LIMA OH");
}

TEST(BuildingRedirect, ChangesOnlyTheNumber) {
  Rng rng(4);
  std::set<int> seen;
  for (int i = 0; i < 500; ++i) {
    const auto w =
        words(building_redirect("APT 3 123 ABC CT LIMA OH", example_cities(), rng));
    ASSERT_EQ(w.size(), 7u);
    const int n = std::stoi(w[2]);
    ASSERT_NE(n, 123);
    ASSERT_LE(std::abs(n - 123), 10);
    seen.insert(n);
  }
  EXPECT_EQ(seen.size(), 20u);
  for (int i = 0; i < 500; ++i) {
    const auto w = words(building_redirect("1 ABC CT LIMA OH", example_cities(), rng));
    ASSERT_GE(std::stoi(w[0]), 2);
  }
}

TEST(StreetRedirect, NewStreetSameEverythingElse) {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    const std::string out =
        street_redirect("UNIT 12 123 ABC CT LIMA OH", example_cities(), rng);
    const auto w = words(out);
    ASSERT_EQ(w.size(), 7u) << out;
    ASSERT_EQ(w[0] + w[1] + w[2], "UNIT12123");
    ASSERT_EQ(w[5] + w[6], "LIMAOH");
    ASSERT_NE(w[3] + " " + w[4], "ABC CT");
  }
}

TEST(CityRedirect, NewRowFromTable) {
  Rng rng(7);
  const CityTable& cities = example_cities();
  for (int i = 0; i < 500; ++i) {
    const std::string out = city_redirect("123 ABC Ct Edison NJ", cities, rng);
    ASSERT_TRUE(out.starts_with("123 ABC Ct ")) << out;
    const AddressLayout layout = AddressLayout::parse(out, cities);
    const std::string city = layout.text_of(TokenRole::kCity);
    const std::string state = layout.text_of(TokenRole::kState);
    ASSERT_TRUE(cities.contains(city, state)) << out;
    ASSERT_FALSE(city == "EDISON" && state == "NJ");
  }
}

TEST(Layout, ParseRecoversRoles) {
  const AddressLayout l =
      AddressLayout::parse("C/O ADAMS BAKER 77 ELM RD NEW YORK NY", example_cities());
  EXPECT_EQ(l.text_of(TokenRole::kPrefixWord), "C/O");
  EXPECT_EQ(l.text_of(TokenRole::kPersonName), "ADAMS BAKER");
  EXPECT_EQ(l.text_of(TokenRole::kBuilding), "77");
  EXPECT_EQ(l.text_of(TokenRole::kStreet), "ELM RD");
  EXPECT_EQ(l.text_of(TokenRole::kCity), "NEW YORK");
  EXPECT_EQ(l.text_of(TokenRole::kState), "NY");
  EXPECT_EQ(l.render(), "C/O ADAMS BAKER 77 ELM RD NEW YORK NY");
  EXPECT_THROW(AddressLayout::parse("NO NUMBER HERE", example_cities()),
               InvalidInputError);
}

TEST(MatchPair, KeepsBuildingAndCity) {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const GeneratedPair g = generate_match_pair(lima_base(), rng);
    EXPECT_EQ(g.pair.label, 1);
    for (const std::string& side : {g.pair.a1, g.pair.a2}) {
      const auto w = words(side);
      ASSERT_NE(std::find(w.begin(), w.end(), "123"), w.end()) << side;
      ASSERT_TRUE(side.ends_with(" LIMA OH")) << side;
    }
  }
}

TEST(MismatchPair, PoolTooSmall) {
  Rng rng(0);
  const std::vector<BaseAddress> pool = {lima_base()};
  EXPECT_THROW(generate_mismatch_pair(lima_base(), pool, example_cities(), rng),
               InvalidInputError);
  const std::vector<BaseAddress> clones = {lima_base(), lima_base()};
  Rng rng2(0);
  bool threw = false;
  for (int i = 0; i < 200 && !threw; ++i) {
    try {
      generate_mismatch_pair(lima_base(), clones, example_cities(), rng2);
    } catch (const InvalidInputError&) {
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(MismatchPair, SidesDifferInALocationField) {
  Rng rng(10);
  const CityTable& cities = CityTable::bundled();
  const auto pool = generate_base_addresses(200, cities, rng);
  std::set<std::string> ops;
  for (int i = 0; i < 2000; ++i) {
    const BaseAddress& base = pool[static_cast<std::size_t>(i) % pool.size()];
    const GeneratedPair g = generate_mismatch_pair(base, pool, cities, rng);
    ASSERT_EQ(g.pair.label, 0);
    ops.insert(g.trace.a1_op + g.trace.a2_op);
    const AddressLayout l1 = AddressLayout::parse(g.pair.a1, cities);
    const AddressLayout l2 = AddressLayout::parse(g.pair.a2, cities);
    const auto location = [](const AddressLayout& l) {
      return l.text_of(TokenRole::kBuilding) + "|" +
             l.text_of(TokenRole::kStreet) + "|" + l.text_of(TokenRole::kCity) +
             "|" + l.text_of(TokenRole::kState);
    };
    ASSERT_NE(location(l1), location(l2)) << g.pair.a1 << " / " << g.pair.a2;
    if (g.trace.swapped_with) {
      const BaseAddress& other = pool[*g.trace.swapped_with];
      const AddressLayout& swapped = g.trace.transformed_side == 1 ? l1 : l2;
      ASSERT_EQ(location(swapped),
                std::to_string(other.building_number) + "|" +
                    other.street_name + "|" + other.city + "|" + other.state);
    }
  }
  EXPECT_EQ(ops.size(), 4u);
}

TEST(BuildDataset, ShapeAndDeterminism) {
  GeneratorConfig config;
  config.n_base = 500;
  config.seed = 42;
  const Dataset a = build_dataset(config);
  const Dataset b = build_dataset(config);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.pairs.size(), 1000u);
  EXPECT_EQ(a.count(Split::kTrain), 800u);
  EXPECT_EQ(a.count(Split::kValid), 100u);
  EXPECT_EQ(a.count(Split::kTest), 100u);
  EXPECT_EQ(a.count_label(1), 500u);
  EXPECT_EQ(a.count_label(0), 500u);
  EXPECT_EQ(a.provenance.n_base, 500u);

  config.seed = 43;
  EXPECT_NE(build_dataset(config).pairs, a.pairs);
}

TEST(BuildDataset, RejectsBadConfig) {
  GeneratorConfig config;
  config.n_base = 0;
  EXPECT_THROW(build_dataset(config), InvalidInputError);
  config.n_base = 10;
  config.train_ratio = 0.9;
  EXPECT_THROW(build_dataset(config), InvalidInputError);
  config.train_ratio = 0.8;
  config.city_table_path = "/nonexistent/cities.csv";
  EXPECT_THROW(build_dataset(config), IngestionError);
}

TEST(BuildDataset, CustomCityTable) {
  const auto path =
      std::filesystem::temp_directory_path() / "addrmatch_two_cities.csv";
  std::ofstream(path) << "City,State\nLima,OH\nReno,NV\n";
  GeneratorConfig config;
  config.n_base = 50;
  config.city_table_path = path;
  for (const LabeledPair& p : build_dataset(config).pairs) {
    for (const std::string& side : {p.a1, p.a2}) {
      ASSERT_TRUE(side.ends_with(" LIMA OH") || side.ends_with(" RENO NV"))
          << side;
    }
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace addrmatch
