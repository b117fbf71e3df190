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
#include <map>
#include <random>
#include <string>
#include <vector>

#include "addrmatch/generator.hpp"
#include "addrmatch/pipeline.hpp"
#include "addrmatch/representation.hpp"
#include "addrmatch/segment.hpp"
#include "addrmatch/similarity.hpp"
#include "addrmatch/tfidf.hpp"
#include "addrmatch/utf8.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace addrmatch {
namespace {

using testing::example_cities;
using testing::example_resources;
using testing::random_string;

constexpr int kCases = 2000;

// Address-like noise: lexicon words, numbers, punctuation and stray bytes.
std::string messy_address(std::mt19937_64& gen) {
  static const std::vector<std::string> pieces = {
      "APT",  "apartment", "Ste",   "FLOOR", "3rd", "21ST",  "st.", "St",
      "AVE",  "Court",     "ct",    "RD",    "W.",  "north", "NE",  "Bldg",
      "P.O.", "Box",       "ATTN",  "c/o",   "123", "4",     "LIMA", "OH",
      "Reno", "NV",        "89501", "USA",   ",",   ";",     "--",  "#",
      "&",    "O'Neil",    "CAFÉ",  "x-y",   "⟨Street⟩", "(", ")", "."};
  std::uniform_int_distribution<std::size_t> count(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string out;
  const std::size_t n = count(gen);
  for (std::size_t i = 0; i < n; ++i) {
    if (gen() % 4 != 0) out += ' ';
    out += pieces[pick(gen)];
  }
  return out;
}

std::string normalized_address(std::mt19937_64& gen) {
  return normalize_text(messy_address(gen), Lexicon::bundled());
}

// Alphanumeric bytes outside of tags, as a multiset.
std::map<char, int> bare_alnum(std::string_view s) {
  std::map<char, int> out;
  const std::u32string cps = utf8::decode(s);
  bool in_tag = false;
  for (char32_t c : cps) {
    if (c == U'⟨') in_tag = true;
    if (!in_tag && c < 128 && std::isalnum(static_cast<int>(c))) {
      ++out[static_cast<char>(c)];
    }
    if (c == U'⟩') in_tag = false;
  }
  return out;
}

AddressRecord random_record(std::mt19937_64& gen) {
  AddressRecord r;
  const FieldKey keys[] = {FieldKey::kStreetNumber, FieldKey::kStreetName,
                           FieldKey::kCity, FieldKey::kUnit};
  for (FieldKey key : keys) {
    StringList l;
    const int n = static_cast<int>(gen() % 3);
    for (int j = 0; j < n; ++j) {
      std::string s = random_string(gen, 5, "ABCD");
      if (!s.empty()) l.push_back(s);
    }
    r.set(key, l);
  }
  return r;
}

bool single_valued(const AddressRecord& r) {
  for (FieldKey key : kAllFieldKeys) {
    if (r.strings(key).size() > 1) return false;
  }
  return true;
}

TEST(Property, NormalizeIdempotent) {
  std::mt19937_64 gen(101);
  const Lexicon& lex = Lexicon::bundled();
  for (int i = 0; i < kCases; ++i) {
    const std::string raw = messy_address(gen);
    const std::string once = normalize_text(raw, lex);
    ASSERT_EQ(normalize_text(once, lex), once) << raw;
  }
}

TEST(Property, NormalizeOutputIsTidy) {
  std::mt19937_64 gen(102);
  for (int i = 0; i < kCases; ++i) {
    const std::string n = normalized_address(gen);
    ASSERT_EQ(n.find("  "), std::string::npos) << n;
    if (n.empty()) continue;
    ASSERT_NE(n.front(), ' ') << n;
    ASSERT_NE(n.back(), ' ') << n;
    ASSERT_NE(n.front(), ',') << n;
    ASSERT_NE(n.back(), ',') << n;
  }
}

TEST(Property, TokensRoundTrip) {
  std::mt19937_64 gen(103);
  for (int i = 0; i < kCases; ++i) {
    const std::string n = normalized_address(gen);
    const auto toks = split_tokens(n);
    std::string joined;
    for (const auto& t : toks) joined += (joined.empty() ? "" : " ") + t;
    ASSERT_EQ(split_tokens(joined), toks) << n;
    for (const auto& t : toks) {
      ASSERT_FALSE(t.empty());
      ASSERT_EQ(t.find_first_of(" ,"), std::string::npos) << t;
    }
  }
}

TEST(Property, NgramsCoverText) {
  std::mt19937_64 gen(104);
  for (int i = 0; i < kCases; ++i) {
    const std::string n = normalized_address(gen);
    const auto grams = char_ngrams(n, 3);
    const std::size_t len = utf8::length(n);
    ASSERT_EQ(grams.size(), len == 0 ? 0 : (len < 3 ? 1 : len - 2)) << n;
    // Consecutive grams overlap by two code points.
    for (std::size_t g = 1; g < grams.size(); ++g) {
      const auto a = utf8::decode(grams[g - 1]);
      const auto b = utf8::decode(grams[g]);
      ASSERT_EQ(a.substr(1), b.substr(0, 2));
    }
  }
}

TEST(Property, SegmentConservesText) {
  std::mt19937_64 gen(105);
  const auto res = example_resources();
  for (int i = 0; i < kCases; ++i) {
    const std::string n = normalized_address(gen);
    if (n.empty()) continue;
    const AddressRecord seg = segment(make_record(n), res->segmenter);
    std::map<char, int> got;
    for (FieldKey key : kAllFieldKeys) {
      for (const auto& v : seg.strings(key)) {
        ASSERT_FALSE(v.empty()) << n;
        for (const auto& [c, k] : bare_alnum(v)) got[c] += k;
      }
    }
    ASSERT_EQ(got, bare_alnum(n)) << n;
  }
}

TEST(Property, SegmentGeneratedAddresses) {
  GeneratorConfig cfg;
  cfg.n_base = 300;
  cfg.seed = 106;
  const Dataset ds = build_dataset(cfg, example_cities());
  const auto res = example_resources();
  for (const LabeledPair& p : ds.pairs) {
    for (const std::string& a : {p.a1, p.a2}) {
      const std::string n = normalize_text(a, res->lexicon);
      const AddressRecord seg = segment(make_record(n), res->segmenter);
      std::map<char, int> got;
      for (FieldKey key : kAllFieldKeys) {
        for (const auto& v : seg.strings(key)) {
          for (const auto& [c, k] : bare_alnum(v)) got[c] += k;
        }
      }
      ASSERT_EQ(got, bare_alnum(n)) << a;
      ASSERT_FALSE(seg.is_empty(FieldKey::kCountyState)) << a;
      ASSERT_FALSE(seg.is_empty(FieldKey::kStreetNumber)) << a;
    }
  }
}

TEST(Property, TfidfDocumentFrequencyMatchesRecount) {
  std::mt19937_64 gen(107);
  for (int round = 0; round < 50; ++round) {
    std::vector<AddressRecord> corpus;
    std::vector<std::vector<std::string>> docs;
    const int n_docs = 1 + static_cast<int>(gen() % 20);
    for (int d = 0; d < n_docs; ++d) {
      const std::string text = normalized_address(gen) + " Z";
      corpus.push_back(tokens(make_record(text)));
      docs.push_back(corpus.back().strings(FieldKey::kAddress));
    }
    const TfidfModel m = tfidf_fit(corpus);
    ASSERT_EQ(m.n_documents(), corpus.size());
    for (const auto& doc : docs) {
      for (const auto& term : doc) {
        ASSERT_EQ(m.document_frequency(term),
                  testing::oracle_document_frequency(docs, term))
            << term;
      }
    }
    ASSERT_EQ(m.document_frequency("Z"), corpus.size());
  }
}

TEST(Property, LevenshteinMetricAxioms) {
  std::mt19937_64 gen(108);
  for (int i = 0; i < kCases; ++i) {
    const std::string a = random_string(gen, 8, "ABC⟩");
    const std::string b = random_string(gen, 8, "ABC");
    const std::string c = random_string(gen, 8, "ABCD");
    const std::size_t ab = levenshtein_distance(a, b);
    ASSERT_EQ(levenshtein_distance(a, a), 0u);
    ASSERT_EQ(ab, levenshtein_distance(b, a));
    ASSERT_LE(ab, levenshtein_distance(a, c) + levenshtein_distance(c, b));
    const std::size_t la = utf8::length(a), lb = utf8::length(b);
    ASSERT_GE(ab, la > lb ? la - lb : lb - la);
    ASSERT_LE(ab, std::max(la, lb));
    ASSERT_EQ(ab == 0, a == b);
  }
}

TEST(Property, JaroWinklerRangeAndSymmetry) {
  std::mt19937_64 gen(109);
  for (int i = 0; i < kCases; ++i) {
    const std::string a = random_string(gen, 10, "ABCDE");
    const std::string b = random_string(gen, 10, "ABCDE");
    const double d = jaro_winkler_distance(a, b);
    ASSERT_GE(d, 0.0);
    ASSERT_LE(d, 1.0);
    ASSERT_DOUBLE_EQ(d, jaro_winkler_distance(b, a)) << a << "|" << b;
    ASSERT_EQ(jaro_winkler_distance(a, a), 0.0);
  }
}

TEST(Property, DecidersReflexiveAndSymmetric) {
  std::mt19937_64 gen(110);
  const Distance string_deciders[] = {Distance::kSimple, Distance::kJaccard,
                                      Distance::kLevenshtein,
                                      Distance::kJaroWinkler};
  for (int i = 0; i < kCases; ++i) {
    const AddressRecord r1 = random_record(gen);
    const AddressRecord r2 = random_record(gen);
    const std::string o1 = "X" + random_string(gen, 30, "Y");
    const std::string o2 = "X" + random_string(gen, 30, "Y");
    for (Distance d : string_deciders) {
      const DeciderParams p = DeciderParams::defaults_for(d);
      if (single_valued(r1) || d == Distance::kSimple || d == Distance::kJaccard) {
        ASSERT_TRUE(decide(d, r1, r1, p, o1, o1)) << distance_name(d);
      }
      ASSERT_EQ(decide(d, r1, r2, p, o1, o2), decide(d, r2, r1, p, o2, o1))
          << distance_name(d);
    }
  }
}

// The averaged deciders take the mean over every cross-list pair, so a key
// holding two different values is at a positive distance from itself.
TEST(Property, AveragedDecidersNotReflexiveOnMultiValuedKeys) {
  AddressRecord r;
  r.set(FieldKey::kAddress, StringList{"A", "BCD"});
  EXPECT_FALSE(levenshtein_match(
      r, r, DeciderParams::defaults_for(Distance::kLevenshtein), "A BCD", "A BCD"));
  EXPECT_TRUE(simple_match(r, r));
}

TEST(Property, JaccardMonotoneUnderCommonElements) {
  std::mt19937_64 gen(111);
  DeciderParams p;
  p.jaccard_threshold = 0.15;
  for (int i = 0; i < kCases; ++i) {
    AddressRecord r1 = random_record(gen);
    AddressRecord r2 = random_record(gen);
    const bool before = jaccard_match(r1, r2, p);
    // Lower-case strings never collide with the generated values.
    const std::string fresh = random_string(gen, 3, "xyz") + "w";
    for (FieldKey key : kAllFieldKeys) {
      StringList a = r1.strings(key);
      StringList b = r2.strings(key);
      if (a.empty() || b.empty()) continue;
      a.push_back(fresh);
      b.push_back(fresh);
      r1.set(key, a);
      r2.set(key, b);
    }
    if (before) {
      ASSERT_TRUE(jaccard_match(r1, r2, p));
    }
  }
}

TEST(Property, MatchersSymmetricOnGeneratedPairs) {
  GeneratorConfig cfg;
  cfg.n_base = 150;
  cfg.seed = 112;
  const Dataset ds = build_dataset(cfg, example_cities());
  std::vector<std::string> corpus;
  for (const auto& p : ds.pairs) {
    corpus.push_back(p.a1);
    corpus.push_back(p.a2);
  }
  for (const AlgorithmConfig& alg : builtin_algorithms()) {
    const Matcher m = compile(alg, example_resources(), corpus);
    for (const LabeledPair& p : ds.pairs) {
      ASSERT_TRUE(m.match(p.a1, p.a1)) << alg.name << ": " << p.a1;
      ASSERT_EQ(m.match(p.a1, p.a2), m.match(p.a2, p.a1))
          << alg.name << ": " << p.a1 << " | " << p.a2;
    }
  }
}

struct Location {
  std::string building, street, city, state;
  bool operator==(const Location&) const = default;
};

Location locate(const std::string& address) {
  const AddressLayout l = AddressLayout::parse(address, example_cities());
  return {l.text_of(TokenRole::kBuilding), l.text_of(TokenRole::kStreet),
          l.text_of(TokenRole::kCity), l.text_of(TokenRole::kState)};
}

TEST(Property, GeneratedPairsKeepOrBreakLocation) {
  for (std::uint64_t seed : {113u, 114u, 115u}) {
    GeneratorConfig cfg;
    cfg.n_base = 400;
    cfg.seed = seed;
    const Dataset ds = build_dataset(cfg, example_cities());
    ASSERT_EQ(ds.count_label(1), cfg.n_base);
    ASSERT_EQ(ds.count_label(0), cfg.n_base);
    for (const LabeledPair& p : ds.pairs) {
      const Location l1 = locate(p.a1);
      const Location l2 = locate(p.a2);
      ASSERT_TRUE(example_cities().contains(l1.city, l1.state)) << p.a1;
      ASSERT_TRUE(example_cities().contains(l2.city, l2.state)) << p.a2;
      if (p.label == 1) {
        ASSERT_EQ(l1.building, l2.building) << p.a1 << " | " << p.a2;
        ASSERT_EQ(l1.city + l1.state, l2.city + l2.state) << p.a1 << " | " << p.a2;
        // Each side edits the street by at most one character or one
        // suffix substitution.
        ASSERT_LE(levenshtein_distance(l1.street, l2.street), 12u)
            << p.a1 << " | " << p.a2;
      } else {
        ASSERT_NE(l1, l2) << p.a1 << " | " << p.a2;
      }
    }
  }
}

TEST(Property, MatchOpsKeepBuildingAndCity) {
  Rng rng(116);
  const CityTable& cities = example_cities();
  for (int i = 0; i < kCases; ++i) {
    const BaseAddress base{static_cast<int>(1 + rng.below(9999)), "ELM ST", "RENO",
                           "NV"};
    const AddressLayout start = add_prefix(base, rng);
    for (MatchOp op : kAllMatchOps) {
      const std::string out = apply_match_op(op, start, rng).render();
      const Location l = locate(out);
      ASSERT_EQ(l.building, std::to_string(base.building_number)) << out;
      ASSERT_EQ(l.city, "RENO") << out;
      ASSERT_EQ(l.state, "NV") << out;
      ASSERT_TRUE(cities.contains(l.city, l.state));
    }
  }
}

}  // namespace
}  // namespace addrmatch
