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
#include "imsc/rational.hpp"

#include <doctest.h>

using namespace imsc;

TEST_CASE("threshold syntax") {
  CHECK(Threshold::parse("30%") == Threshold(3, 10));
  CHECK(Threshold::parse("0.30") == Threshold(3, 10));
  CHECK(Threshold::parse("3/10") == Threshold(3, 10));
  CHECK(Threshold::parse("0.25%") == Threshold(1, 400));
  CHECK(Threshold::parse(".5") == Threshold(1, 2));
  CHECK(Threshold::parse("1") == Threshold(1, 1));
  CHECK(Threshold::parse("0") == Threshold(0, 1));
  CHECK(to_string(Threshold::parse("35%")) == "7/20");

  CHECK_THROWS_AS(Threshold::parse("abc"), UsageError);
  CHECK_THROWS_AS(Threshold::parse("120%"), UsageError);
  CHECK_THROWS_AS(Threshold::parse("-1/10"), UsageError);
  CHECK_THROWS_AS(Threshold::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Threshold::parse(""), UsageError);
}

TEST_CASE("rationals keep lowest terms and signs") {
  CHECK(to_string(parse_rational("-0.75")) == "-3/4");
  CHECK(to_string(parse_rational("2.55")) == "51/20");
  CHECK(ceil(Rational(51, 20)) == 3);
  CHECK(ceil(Rational(-3, 4)) == 0);
  CHECK(ceil(Rational(-7, 4)) == -1);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("meets_threshold is inclusive and exact") {
  CHECK(meets_threshold(5, Threshold(35, 100), 13));   // 5 >= 4.55
  CHECK_FALSE(meets_threshold(4, Threshold(35, 100), 13));
  CHECK(meets_threshold(5, Threshold(50, 100), 10));   // boundary
  CHECK_FALSE(meets_threshold(4, Threshold(50, 100), 10));

  for (Count total : {0u, 1u, 7u, 100u}) {
    for (Count c = 0; c <= total; ++c) {
      CHECK(meets_threshold(c, Threshold(0, 1), total));
      CHECK(meets_threshold(c, Threshold(1, 1), total) == (c == total));
    }
  }
}

TEST_CASE("min_frequent_count") {
  CHECK(min_frequent_count(Threshold(35, 100), 13) == 5);
  CHECK(min_frequent_count(Threshold(3, 10), 10) == 3);
  CHECK(min_frequent_count(Threshold(0, 1), 10) == 1);
  CHECK(min_frequent_count(Threshold(1, 2), 0) == 1);
  for (Count total = 0; total < 40; ++total) {
    Threshold t(7, 20);
    Count m = min_frequent_count(t, total);
    CHECK(meets_threshold(m, t, total));
    if (m > 1) CHECK_FALSE(meets_threshold(m - 1, t, total));
  }
}
