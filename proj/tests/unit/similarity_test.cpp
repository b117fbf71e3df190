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

#include <cmath>
#include <random>

#include "addrmatch/error.hpp"
#include "addrmatch/similarity.hpp"
#include "addrmatch/utf8.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace addrmatch {
namespace {

using testing::oracle_averaged_match;
using testing::oracle_jaro_winkler_distance;
using testing::oracle_levenshtein;

AddressRecord address_only(StringList values) {
  AddressRecord r;
  r.set(FieldKey::kAddress, std::move(values));
  return r;
}

TermVector vec(std::map<std::string, double> w, std::uint64_t model = 1) {
  return TermVector{std::move(w), model};
}

AddressRecord vector_record(std::vector<TermVector> v) {
  AddressRecord r;
  r.set(FieldKey::kAddress, VectorList(std::move(v)));
  r.set_vectorized(true);
  return r;
}

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein_distance("123 ABC Court", "23 ABC Court"), 1u);
  EXPECT_EQ(levenshtein_distance("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein_distance("", "ABC"), 3u);
  EXPECT_EQ(levenshtein_distance("ABC", "ABC"), 0u);
  // Counted in code points, so a tag glyph costs one edit.
  EXPECT_EQ(levenshtein_distance("⟨St⟩", "(St⟩"), 1u);
}

TEST(Levenshtein, MatchesOracle) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    const std::string a = testing::random_string(gen, 9, "ABC D1");
    const std::string b = testing::random_string(gen, 9, "ABC D1");
    ASSERT_EQ(levenshtein_distance(a, b), oracle_levenshtein(a, b)) << a << "|" << b;
  }
}

TEST(JaroWinkler, Examples) {
  EXPECT_DOUBLE_EQ(jaro_winkler_distance("MAIN", "MAIN"), 0.0);
  EXPECT_DOUBLE_EQ(jaro_winkler_distance("", ""), 0.0);
  EXPECT_DOUBLE_EQ(jaro_winkler_distance("", "MAIN"), 1.0);
  EXPECT_DOUBLE_EQ(jaro_winkler_distance("ABC", "XYZ"), 1.0);
  // Textbook pair: Jaro 0.944..., Winkler 0.961...
  EXPECT_NEAR(jaro_winkler_distance("MARTHA", "MARHTA"), 1.0 - 0.9611111111, 1e-9);
  EXPECT_NEAR(jaro_winkler_distance("DWAYNE", "DUANE"), 1.0 - 0.84, 1e-9);
}

TEST(JaroWinkler, MatchesOracle) {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 2000; ++i) {
    const std::string a = testing::random_string(gen, 10, "ABCDE ");
    const std::string b = testing::random_string(gen, 10, "ABCDE ");
    ASSERT_NEAR(jaro_winkler_distance(a, b), oracle_jaro_winkler_distance(a, b),
                1e-12)
        << a << "|" << b;
  }
}

TEST(Cosine, Basics) {
  const TermVector a = vec({{"A", 1.0}, {"B", 2.0}});
  EXPECT_NEAR(cosine_similarity(a, a), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(cosine_similarity(a, vec({{"C", 3.0}})), 0.0);
  EXPECT_NEAR(cosine_similarity(a, vec({{"A", 1.0}})), 1.0 / std::sqrt(5.0), 1e-12);
  EXPECT_THROW(cosine_similarity(a, vec({{"A", 1.0}}, 2)), InvalidInputError);
}

TEST(SimpleMatch, Examples) {
  const AddressRecord r = address_only({"123 ABC COURT"});
  EXPECT_TRUE(simple_match(r, r));
  EXPECT_FALSE(simple_match(r, address_only({"123 ABC CT"})));

  AddressRecord a = r;
  AddressRecord b = r;
  b.set(FieldKey::kFloor, StringList{"3"});
  EXPECT_TRUE(simple_match(a, b));
  a.set(FieldKey::kFloor, StringList{"4"});
  EXPECT_FALSE(simple_match(a, b));
  // Lists are compared as sets.
  EXPECT_TRUE(simple_match(address_only({"A", "B", "A"}), address_only({"B", "A"})));
}

TEST(JaccardMatch, Examples) {
  const DeciderParams p;
  const AddressRecord abcd = address_only({"A", "B", "C", "D"});
  EXPECT_TRUE(jaccard_match(abcd, abcd, p));
  // 1 - 3/5 = 0.4 against 0.05 * 4 = 0.2.
  EXPECT_FALSE(jaccard_match(abcd, address_only({"A", "B", "C", "E"}), p));
  // 1 - 3/5 = 0.4 against 0.2 * 4 = 0.8.
  DeciderParams loose;
  loose.jaccard_threshold = 0.2;
  EXPECT_TRUE(jaccard_match(abcd, address_only({"A", "B", "C", "E"}), loose));
  EXPECT_TRUE(jaccard_match(abcd, AddressRecord(), p));
}

TEST(LevenshteinMatch, Examples) {
  const DeciderParams p = DeciderParams::defaults_for(Distance::kLevenshtein);
  const AddressRecord r = address_only({"ABCDEFGHIJ"});
  EXPECT_TRUE(levenshtein_match(r, r, p, "ABCDEFGHIJ", "ABCDEFGHIJ"));
  // mu = 1 < 0.2 * 10, aggregate 1 < 0.2 * 10.
  EXPECT_TRUE(levenshtein_match(r, address_only({"ABCDEFGHIX"}), p, "ABCDEFGHIJ",
                                "ABCDEFGHIX"));
  // mu = 5 >= 0.2 * 5.
  EXPECT_FALSE(levenshtein_match(address_only({"ABCDE"}), address_only({"VWXYZ"}),
                                 p, "ABCDE", "VWXYZ"));
}

TEST(LevenshteinMatch, AggregateUsesOriginalLength) {
  const DeciderParams p = DeciderParams::defaults_for(Distance::kLevenshtein);
  const AddressRecord a = address_only({"ABCDEFGHIJ"});
  const AddressRecord b = address_only({"ABCDEFGHXY"});
  // mu = 2 reaches 0.2 * 10, so the key itself fails.
  EXPECT_FALSE(levenshtein_match(a, b, p, "ABCDEFGHIJ", "ABCDEFGHXY"));
  const AddressRecord c = address_only({"ABCDEFGHIJKLMNO"});
  const AddressRecord d = address_only({"ABCDEFGHIJKLMNX"});
  EXPECT_TRUE(levenshtein_match(c, d, p, "ABCDEFGHIJKLMNO", "ABCDEFGHIJKLMNX"));
  // Key passes (1 < 3) but the aggregate bound is 0.2 * 4.
  EXPECT_FALSE(levenshtein_match(c, d, p, "ABCD", "ABCDEFGHIJKLMNX"));
}

TEST(JaroWinklerMatch, IdenticalRecords) {
  const DeciderParams p = DeciderParams::defaults_for(Distance::kJaroWinkler);
  const AddressRecord r = address_only({"123 ABC CT"});
  EXPECT_TRUE(jaro_winkler_match(r, r, p, "123 ABC CT", "123 ABC CT"));
}

// Searches random two-key records for one where every key passes its own
// bound but the aggregate fails, and checks the decider against the oracle
// along the way.
TEST(JaroWinklerMatch, KeyPassAggregateFail) {
  const DeciderParams p = DeciderParams::defaults_for(Distance::kJaroWinkler);
  std::mt19937_64 gen(21);
  bool found = false;
  for (int i = 0; i < 5000; ++i) {
    const auto draw = [&] {
      StringList l;
      const int n = static_cast<int>(gen() % 3);
      for (int j = 0; j < n; ++j) {
        std::string s = testing::random_string(gen, 6, "ABCD");
        if (!s.empty()) l.push_back(s);
      }
      return l;
    };
    const StringList a1 = draw(), a2 = draw(), b1 = draw(), b2 = draw();
    AddressRecord r1, r2;
    r1.set(FieldKey::kStreetName, a1);
    r1.set(FieldKey::kCity, a2);
    r2.set(FieldKey::kStreetName, b1);
    r2.set(FieldKey::kCity, b2);
    const double ma = static_cast<double>(1 + gen() % 40);
    const std::string o1(static_cast<std::size_t>(ma), 'x');
    const std::string o2(60, 'y');
    const bool want = oracle_averaged_match({a1, a2}, {b1, b2}, p.ltv_min,
                                            p.lta_max, ma,
                                            oracle_jaro_winkler_distance);
    ASSERT_EQ(jaro_winkler_match(r1, r2, p, o1, o2), want);
    // Same records with an unbounded aggregate: isolates the per-key part.
    const bool keys_pass = oracle_averaged_match(
        {a1, a2}, {b1, b2}, p.ltv_min, 1e9, ma, oracle_jaro_winkler_distance);
    if (keys_pass && !want) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(AveragedMatch, MatchesOracleForLevenshtein) {
  const DeciderParams p = DeciderParams::defaults_for(Distance::kLevenshtein);
  std::mt19937_64 gen(22);
  for (int i = 0; i < 3000; ++i) {
    std::vector<StringList> k1(3), k2(3);
    AddressRecord r1, r2;
    const FieldKey keys[] = {FieldKey::kStreetNumber, FieldKey::kStreetName,
                             FieldKey::kUnit};
    for (int k = 0; k < 3; ++k) {
      for (auto* l : {&k1[k], &k2[k]}) {
        const int n = static_cast<int>(gen() % 3);
        for (int j = 0; j < n; ++j) {
          std::string s = testing::random_string(gen, 12, "ABCDEFGH");
          if (!s.empty()) l->push_back(s);
        }
      }
      r1.set(keys[k], k1[k]);
      r2.set(keys[k], k2[k]);
    }
    const std::string o1 = testing::random_string(gen, 40, "Z") + "Z";
    const std::string o2 = testing::random_string(gen, 40, "Z") + "Z";
    const double ma = static_cast<double>(std::min(o1.size(), o2.size()));
    const bool want = oracle_averaged_match(
        k1, k2, p.ltv_min, p.lta_max, ma, [](std::string_view s, std::string_view t) {
          return static_cast<double>(oracle_levenshtein(s, t));
        });
    ASSERT_EQ(levenshtein_match(r1, r2, p, o1, o2), want) << i;
  }
}

TEST(CosineMatch, Examples) {
  const DeciderParams p;
  const AddressRecord a = vector_record({vec({{"A", 1.0}, {"B", 1.0}})});
  EXPECT_TRUE(cosine_match(a, a, p));
  EXPECT_FALSE(cosine_match(a, vector_record({vec({{"C", 1.0}})}), p));
  EXPECT_THROW(cosine_match(a, vector_record({vec({{"A", 1.0}}, 9)}), p),
               InvalidInputError);
  EXPECT_THROW(cosine_match(address_only({"A"}), address_only({"A"}), p),
               InvalidInputError);
  EXPECT_TRUE(cosine_match(a, AddressRecord(), p));
}

TEST(Decide, Dispatches) {
  const AddressRecord a = address_only({"A", "B", "C", "D"});
  const AddressRecord b = address_only({"A", "B", "C", "E"});
  const DeciderParams p;
  EXPECT_EQ(decide(Distance::kSimple, a, b, p, "x", "y"), simple_match(a, b));
  EXPECT_EQ(decide(Distance::kJaccard, a, b, p, "x", "y"), jaccard_match(a, b, p));
  EXPECT_THROW(decide(Distance::kLevenshtein, a, vector_record({vec({})}), p, "x", "y"),
               InvalidInputError);
}

}  // namespace
}  // namespace addrmatch
