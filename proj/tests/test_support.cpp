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

#include "imsc/support.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <random>

using namespace imsc;
using namespace imsc::testing;

TEST_CASE("count_supports on BD10") {
  Fixture fx;
  std::vector<Itemset> targets{fx("A"), fx("ABC"), Itemset{}};
  auto before = fx.bd10.scan_count();
  auto counts = count_supports(fx.bd10, targets);
  CHECK(fx.bd10.scan_count() == before + 1);
  CHECK(counts == std::vector<Count>{7, 3, 10});

  auto m = support_map(fx.bd10, targets);
  CHECK(m.at(fx("A")) == 7);
  CHECK(m.at(Itemset{}) == 10);
}

TEST_CASE("count_supports handles mixed sizes, repeats and unknown items") {
  Fixture fx;
  std::vector<Itemset> targets{fx("CD"), fx("A"), fx("CD"), fx("ABCD"), Itemset{99}, Itemset{0, 99}, fx("BCD")};
  auto counts = count_supports(fx.bd10, targets);
  CHECK(counts == std::vector<Count>{3, 7, 3, 1, 0, 0, 2});
  CHECK(count_supports_serial(fx.bd10, targets) == counts);
  CHECK(count_supports(fx.bd10, {}).empty());
}

TEST_CASE("one ledger increment per call, serial and parallel") {
  Fixture fx;
  std::vector<Itemset> targets{fx("A")};
  auto before = fx.bd10.scan_count();
  count_supports(fx.bd10, targets);
  count_supports_serial(fx.bd10, targets);
  count_items(fx.bd10);
  count_items_serial(fx.bd10);
  CHECK(fx.bd10.scan_count() == before + 4);
}

TEST_CASE("count_items") {
  Fixture fx;
  auto counts = count_items(fx.bd10);
  CHECK(counts == std::vector<Count>{7, 5, 6, 4});
  CHECK(count_items_serial(fx.bd10) == counts);
  CHECK(count_items(TransactionDB{}).empty());
}

TEST_CASE("parallel kernels match the serial reference and the naive oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    ItemDictionary dict;
    // Above kParallelCutoff so the OpenMP path actually splits work.
    auto db = random_db(rng, dict, kParallelCutoff + 1000 + trial * 37, 30, 9);
    std::vector<Itemset> targets;
    std::uniform_int_distribution<std::size_t> size(0, 4);
    std::uniform_int_distribution<ItemId> item(0, 29);
    for (int i = 0; i < 300; ++i) {
      std::vector<ItemId> ids;
      auto n = size(rng);
      for (std::size_t j = 0; j < n; ++j) ids.push_back(item(rng));
      targets.emplace_back(std::move(ids));
    }
    auto par = count_supports(db, targets);
    auto ser = count_supports_serial(db, targets);
    REQUIRE(par == ser);
    for (std::size_t i = 0; i < 40; ++i) CHECK(par[i] == naive_count(db, targets[i]));
    CHECK(count_items(db) == count_items_serial(db));
  }
}

TEST_CASE("counts do not depend on the thread count") {
  std::mt19937_64 rng(5);
  ItemDictionary dict;
  auto db = random_db(rng, dict, 3 * kParallelCutoff, 20, 8);
  std::vector<Itemset> targets;
  for (ItemId a = 0; a < 20; ++a) {
    for (ItemId b = a + 1; b < 20; ++b) targets.push_back(Itemset{a, b});
  }
  auto reference = count_supports_serial(db, targets);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 4}) {
    omp_set_num_threads(threads);
    CHECK(count_supports(db, targets) == reference);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("count_supports is order invariant and additive over a split") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    ItemDictionary dict;
    auto db = random_db(rng, dict, 60, 8, 6);
    std::vector<Itemset> targets;
    for (ItemId a = 0; a < 8; ++a) {
      targets.push_back(Itemset{a});
      for (ItemId b = a + 1; b < 8; ++b) targets.push_back(Itemset{a, b});
    }
    targets.push_back(Itemset{0, 1, 2});

    auto counts = count_supports(db, targets);

    std::vector<Transaction> shuffled(db.transactions().begin(), db.transactions().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(count_supports(TransactionDB(shuffled), targets) == counts);

    auto cut = std::uniform_int_distribution<std::size_t>(0, db.cardinality())(rng);
    auto left = count_supports(db.slice(0, cut), targets);
    auto right = count_supports(db.slice(cut, db.cardinality()), targets);
    for (std::size_t i = 0; i < targets.size(); ++i) CHECK(left[i] + right[i] == counts[i]);

    // Anti-monotone: {a} ⊂ {a, b}.
    for (std::size_t i = 0; i < targets.size(); ++i) {
      for (std::size_t j = 0; j < targets.size(); ++j) {
        if (is_subset(targets[i], targets[j])) CHECK(counts[i] >= counts[j]);
      }
    }
  }
}

TEST_CASE("a compiled SupportCounter serves several databases") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    ItemDictionary dict;
    auto a = random_db(rng, dict, 5000, 12, 7);
    auto b = random_db(rng, dict, 30, 12, 7);
    std::vector<Itemset> targets;
    for (ItemId x = 0; x < 12; ++x) {
      for (ItemId y = x + 1; y < 12; ++y) targets.push_back(Itemset{x, y});
    }
    targets.push_back(Itemset{1, 2, 3});
    targets.push_back(Itemset{1, 2});

    SupportCounter counter(targets);
    auto before = a.scan_count();
    auto on_a = counter.count(a);
    CHECK(a.scan_count() == before + 1);
    CHECK(on_a == count_supports_serial(a, targets));
    CHECK(counter.count_serial(a) == on_a);
    auto on_b = counter.count(b);
    for (std::size_t i = 0; i < targets.size(); ++i) CHECK(on_b[i] == naive_count(b, targets[i]));
  }
}
