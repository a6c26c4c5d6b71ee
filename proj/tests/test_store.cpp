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

#include "imsc/error.hpp"
#include "imsc/store.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace imsc;
using namespace imsc::testing;

TEST_CASE("store levels and lookup") {
  Fixture fx;
  auto f = fx.store(10, Threshold(3, 10),
                    {{"A", 7}, {"B", 5}, {"C", 6}, {"D", 4}, {"AB", 4}, {"AC", 4}, {"BC", 4}, {"CD", 3}, {"ABC", 3}});
  CHECK(f.size() == 9);
  CHECK(f.max_level() == 3);
  CHECK(f.level(2).size() == 4);
  CHECK(f.level(4).empty());
  CHECK(f.level(0).empty());
  CHECK(f.find(fx("CD")) == 3u);
  CHECK_FALSE(f.contains(fx("BD")));
  CHECK_NOTHROW(f.validate());
  CHECK(describe(f, fx.dict) == "{A:7, B:5, C:6, D:4, AB:4, AC:4, BC:4, CD:3, ABC:3}");

  f.set_level(3, {});
  CHECK(f.max_level() == 2);
}

TEST_CASE("validate reports each invariant") {
  Fixture fx;
  SUBCASE("downward closure") {
    auto f = fx.store(10, Threshold(3, 10), {{"A", 7}, {"B", 5}, {"AB", 4}, {"ABC", 3}});
    CHECK_THROWS_AS(f.validate(&fx.dict), InvariantViolation);
  }
  SUBCASE("threshold") {
    auto f = fx.store(10, Threshold(3, 10), {{"A", 7}, {"B", 2}});
    CHECK_THROWS_WITH_AS(f.validate(&fx.dict), doctest::Contains("{B}"), InvariantViolation);
  }
  SUBCASE("count domination") {
    auto f = fx.store(10, Threshold(3, 10), {{"A", 7}, {"B", 5}, {"AB", 6}});
    CHECK_THROWS_AS(f.validate(), InvariantViolation);
  }
  SUBCASE("zero counts") {
    auto f = fx.store(10, Threshold(0, 1), {{"A", 0}});
    CHECK_THROWS_AS(f.validate(), InvariantViolation);
  }
  SUBCASE("empty itemset") {
    FrequentSetStore f(10, Threshold(0, 1));
    CHECK_THROWS_AS(f.insert(Itemset{}, 10), InvariantViolation);
  }
}
