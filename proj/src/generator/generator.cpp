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

#include <cmath>
#include <numeric>

#include "addrmatch/error.hpp"
#include "addrmatch/generator.hpp"

namespace addrmatch {

namespace {

constexpr int kMaxBuilding = 9999;
constexpr int kMaxApartment = 999;
constexpr int kMaxFloor = 99;
constexpr int kSwapAttempts = 64;

std::vector<AddressToken> prefix_tokens(Rng& rng) {
  const auto kind = static_cast<PrefixKind>(rng.below(3));
  std::vector<AddressToken> tokens;
  tokens.push_back(
      {std::string(rng.pick(prefix_words(kind))), TokenRole::kPrefixWord});
  switch (kind) {
    case PrefixKind::kApartment:
      tokens.push_back({std::to_string(rng.uniform(1, kMaxApartment)),
                        TokenRole::kPrefixValue});
      break;
    case PrefixKind::kFloor:
      tokens.push_back({std::to_string(rng.uniform(1, kMaxFloor)),
                        TokenRole::kPrefixValue});
      break;
    case PrefixKind::kName:
      for (int i = 0; i < 2; ++i) {
        tokens.push_back(
            {std::string(rng.pick(name_words())), TokenRole::kPersonName});
      }
      break;
  }
  return tokens;
}

std::size_t pick_swap_partner(const BaseAddress& base,
                              std::span<const BaseAddress> pool, Rng& rng) {
  for (int attempt = 0; attempt < kSwapAttempts; ++attempt) {
    const std::size_t j = rng.below(pool.size());
    if (!pool[j].same_location(base)) return j;
  }
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (!pool[j].same_location(base)) return j;
  }
  throw InvalidInputError("pool has no address at a different location");
}

}  // namespace

void validate_generator_config(const GeneratorConfig& config) {
  if (config.n_base == 0) throw InvalidInputError("n_base must be positive");
  const double ratios[] = {config.train_ratio, config.valid_ratio,
                           config.test_ratio};
  for (double r : ratios) {
    if (!(r >= 0.0)) throw InvalidInputError("split ratios must be >= 0");
  }
  if (std::abs(ratios[0] + ratios[1] + ratios[2] - 1.0) > 1e-9) {
    throw InvalidInputError("split ratios must sum to 1");
  }
}

// Draw order per address: building, street word, suffix, city row.
std::vector<BaseAddress> generate_base_addresses(std::uint64_t n_base,
                                                 const CityTable& cities,
                                                 Rng& rng) {
  if (n_base == 0) throw InvalidInputError("n_base must be positive");
  if (cities.size() == 0) throw IngestionError("city table is empty");
  std::vector<BaseAddress> out;
  out.reserve(n_base);
  for (std::uint64_t i = 0; i < n_base; ++i) {
    BaseAddress base;
    base.building_number = static_cast<int>(rng.uniform(1, kMaxBuilding));
    base.street_name = std::string(rng.pick(name_words()));
    base.street_name += ' ';
    base.street_name += rng.pick(street_suffixes());
    const CityEntry& row = cities.rows()[rng.below(cities.size())];
    base.city = row.city;
    base.state = row.state;
    out.push_back(std::move(base));
  }
  return out;
}

AddressLayout add_prefix(const BaseAddress& base, Rng& rng) {
  std::vector<AddressToken> tokens = prefix_tokens(rng);
  const AddressLayout body = AddressLayout::from_base(base);
  tokens.insert(tokens.end(), body.tokens().begin(), body.tokens().end());
  return AddressLayout(std::move(tokens));
}

std::string add_prefix_string(const BaseAddress& base, Rng& rng) {
  return add_prefix(base, rng).render();
}

GeneratedPair generate_match_pair(const BaseAddress& base, Rng& rng) {
  AddressLayout a1 = add_prefix(base, rng);
  AddressLayout a2 = add_prefix(base, rng);
  const MatchOp op1 = kAllMatchOps[rng.below(kAllMatchOps.size())];
  a1 = apply_match_op(op1, std::move(a1), rng);
  const MatchOp op2 = kAllMatchOps[rng.below(kAllMatchOps.size())];
  a2 = apply_match_op(op2, std::move(a2), rng);

  GeneratedPair out;
  out.pair = {a1.render(), a2.render(), 1, Split::kTrain};
  out.trace.a1_op = match_op_name(op1);
  out.trace.a2_op = match_op_name(op2);
  return out;
}

GeneratedPair generate_mismatch_pair(const BaseAddress& base,
                                     std::span<const BaseAddress> pool,
                                     const CityTable& cities, Rng& rng) {
  if (pool.size() < 2) {
    throw InvalidInputError("mismatch pool needs at least two addresses");
  }
  AddressLayout sides[2] = {add_prefix(base, rng), add_prefix(base, rng)};
  const int side = static_cast<int>(rng.below(2));
  const MismatchOp op = kAllMismatchOps[rng.below(kAllMismatchOps.size())];

  GeneratedPair out;
  AddressLayout& target = sides[side];
  switch (op) {
    case MismatchOp::kBuildingRedirect:
      target = building_redirect(std::move(target), rng);
      break;
    case MismatchOp::kStreetRedirect:
      target = street_redirect(std::move(target), rng);
      break;
    case MismatchOp::kCityRedirect:
      target = city_redirect(std::move(target), cities, rng);
      break;
    case MismatchOp::kPoolSwap: {
      const std::size_t j = pick_swap_partner(base, pool, rng);
      target = add_prefix(pool[j], rng);
      out.trace.swapped_with = j;
      break;
    }
  }
  out.pair = {sides[0].render(), sides[1].render(), 0, Split::kTrain};
  out.trace.transformed_side = side + 1;
  (side == 0 ? out.trace.a1_op : out.trace.a2_op) = mismatch_op_name(op);
  return out;
}

GeneratedDataset build_dataset_traced(const GeneratorConfig& config,
                                      const CityTable& cities) {
  validate_generator_config(config);
  Rng rng(config.seed);
  const std::vector<BaseAddress> bases =
      generate_base_addresses(config.n_base, cities, rng);

  std::vector<GeneratedPair> generated;
  generated.reserve(2 * bases.size());
  for (const BaseAddress& base : bases) {
    generated.push_back(generate_match_pair(base, rng));
  }
  for (const BaseAddress& base : bases) {
    generated.push_back(generate_mismatch_pair(base, bases, cities, rng));
  }

  std::vector<std::size_t> order(generated.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));

  const std::size_t total = generated.size();
  // The epsilon absorbs ratios like 0.1 not being exact in binary.
  const auto share = [total](double ratio) {
    return static_cast<std::size_t>(
        std::floor(ratio * static_cast<double>(total) + 1e-9));
  };
  const std::size_t n_train = share(config.train_ratio);
  const std::size_t n_valid = std::min(share(config.valid_ratio), total - n_train);

  GeneratedDataset out;
  out.dataset.seed = config.seed;
  out.dataset.provenance = {config.n_base,
                            config.seed,
                            cities.source(),
                            config.train_ratio,
                            config.valid_ratio,
                            config.test_ratio};
  out.dataset.pairs.reserve(total);
  out.traces.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    GeneratedPair& g = generated[order[k]];
    g.pair.split = k < n_train             ? Split::kTrain
                   : k < n_train + n_valid ? Split::kValid
                                           : Split::kTest;
    out.dataset.pairs.push_back(std::move(g.pair));
    out.traces.push_back(std::move(g.trace));
  }
  return out;
}

Dataset build_dataset(const GeneratorConfig& config, const CityTable& cities) {
  return build_dataset_traced(config, cities).dataset;
}

Dataset build_dataset(const GeneratorConfig& config) {
  if (config.city_table_path) {
    return build_dataset(config, CityTable::load(*config.city_table_path));
  }
  return build_dataset(config, CityTable::bundled());
}

}  // namespace addrmatch
