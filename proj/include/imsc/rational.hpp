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

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace imsc {

/// Support counts are absolute transaction counts.
using Count = std::uint64_t;

/// Exact signed rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

/// "num/den" in lowest terms, e.g. "51/20" or "-3/4".
std::string to_string(const Rational& r);

/// Parses "30%", "0.30", "3/10", "-3/4" or a plain integer.
/// Decimals become num/10^k. Throws UsageError on bad syntax.
Rational parse_rational(std::string_view text);

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

/// A relative frequency in [0, 1] (minimum support or minimum confidence).
class Threshold {
public:
  Threshold() = default;
  Threshold(std::int64_t num, std::int64_t den);
  explicit Threshold(const Rational& value);

  /// Same syntax as parse_rational; the value must land in [0, 1].
  static Threshold parse(std::string_view text);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const Rational& value() const { return value_; }

  /// threshold × total, exact.
  Rational times(Count total) const { return value_ * Rational(static_cast<std::int64_t>(total)); }

  friend bool operator==(const Threshold&, const Threshold&) = default;
  friend bool operator<(const Threshold& a, const Threshold& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Threshold& a, const Threshold& b) { return a.value_ <= b.value_; }

private:
  Rational value_{0};
};

std::string to_string(const Threshold& t);

/// count >= thr × total, decided by cross-multiplication.
bool meets_threshold(Count count, const Threshold& thr, Count total);

/// Smallest count an itemset needs to be frequent at thr in a database of
/// `total` transactions: max(ceil(thr × total), 1). Itemsets that never
/// occur are never reported as frequent.
Count min_frequent_count(const Threshold& thr, Count total);

}  // namespace imsc
