// Copyright 2026 The imsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "imsc/datagen.hpp"

#include "imsc/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace imsc {

namespace {

class Variates {
public:
  explicit Variates(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // [0, n)
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }

  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  double normal(double mean, double stddev) {
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Knuth's product method; normal approximation for large means.
  std::uint64_t poisson(double mean) {
    if (mean > 30.0) {
      double x = std::round(normal(mean, std::sqrt(mean)));
      return x < 0 ? 0 : static_cast<std::uint64_t>(x);
    }
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = uniform();
    while (p > limit) {
      ++k;
      p *= uniform();
    }
    return k;
  }

private:
  std::mt19937_64 engine_;
};

struct Pattern {
  std::vector<ItemId> items;  // random order; corruption drops from the back
  double corruption = 0.0;
};

std::vector<Pattern> make_patterns(const GenParams& p, Variates& rng) {
  std::vector<Pattern> patterns(p.n_patterns);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    auto size = std::clamp<std::uint64_t>(rng.poisson(p.avg_pattern_len), 1, p.n_items);
    std::vector<ItemId> items;
    items.reserve(size);

    if (i > 0) {
      std::vector<ItemId> prev = patterns[i - 1].items;
      double frac = std::min(1.0, rng.exponential(0.5));
      auto reuse = std::min<std::uint64_t>(size, static_cast<std::uint64_t>(std::llround(frac * prev.size())));
      for (std::uint64_t j = 0; j < reuse; ++j) {
        auto pick = j + rng.below(prev.size() - j);
        std::swap(prev[j], prev[pick]);
        items.push_back(prev[j]);
      }
    }
    while (items.size() < size) {
      auto item = static_cast<ItemId>(rng.below(p.n_items));
      if (std::find(items.begin(), items.end(), item) == items.end()) items.push_back(item);
    }
    patterns[i].items = std::move(items);
    patterns[i].corruption = std::clamp(rng.normal(p.corruption_mean, 0.1), 0.0, 1.0);
  }
  return patterns;
}

}  // namespace

void validate(const GenParams& p) {
  if (!(p.avg_tx_len > 0)) throw InvalidParams("average transaction length must be positive");
  if (!(p.avg_pattern_len > 0)) throw InvalidParams("average pattern length must be positive");
  if (p.n_patterns == 0) throw InvalidParams("pattern count must be positive");
  if (p.n_items == 0) throw InvalidParams("item count must be positive");
  if (p.n_items > (std::uint64_t{1} << 31)) throw InvalidParams("item count too large");
  if (!(p.corruption_mean >= 0 && p.corruption_mean <= 1)) {
    throw InvalidParams("corruption mean must lie in [0, 1]");
  }
}

TransactionDB generate_db(const GenParams& p, ItemDictionary& dict) {
  validate(p);
  Variates rng(p.seed);
  auto patterns = make_patterns(p, rng);

  std::vector<double> cumulative(patterns.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    acc += rng.exponential(1.0);
    cumulative[i] = acc;
  }

  auto pick_pattern = [&]() -> const Pattern& {
    double u = rng.uniform() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return patterns[static_cast<std::size_t>(it - cumulative.begin())];
  };

  // Labels are interned lazily so ids follow first appearance in the data.
  std::vector<ItemId> label_to_id(p.n_items, std::numeric_limits<ItemId>::max());
  auto intern = [&](ItemId label) {
    if (label_to_id[label] == std::numeric_limits<ItemId>::max()) {
      label_to_id[label] = dict.intern(std::to_string(label));
    }
    return label_to_id[label];
  };

  std::vector<Transaction> txs;
  txs.reserve(p.n_transactions);
  std::vector<ItemId> carried;
  for (std::uint64_t t = 0; t < p.n_transactions; ++t) {
    const auto target = std::max<std::uint64_t>(1, rng.poisson(p.avg_tx_len));
    std::vector<ItemId> items;

    for (int attempts = 0; items.size() < target && attempts < 1000; ++attempts) {
      std::vector<ItemId> chunk;
      if (!carried.empty()) {
        chunk.swap(carried);
      } else {
        const Pattern& pat = pick_pattern();
        chunk = pat.items;
        while (!chunk.empty() && rng.uniform() < pat.corruption) chunk.pop_back();
      }
      if (chunk.empty()) continue;
      if (!items.empty() && items.size() + chunk.size() > target && rng.uniform() < 0.5) {
        carried = std::move(chunk);
        break;
      }
      items.insert(items.end(), chunk.begin(), chunk.end());
    }

    std::vector<ItemId> ids;
    ids.reserve(items.size());
    for (ItemId label : items) ids.push_back(intern(label));
    txs.push_back({std::nullopt, Itemset(std::move(ids))});
  }
  return TransactionDB(std::move(txs));
}

}  // namespace imsc
