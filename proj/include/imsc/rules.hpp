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

#include "imsc/itemset.hpp"
#include "imsc/rational.hpp"
#include "imsc/store.hpp"

#include <vector>

namespace imsc {

/// X -> Y with disjoint non-empty sides. support_count is count(X ∪ Y) and
/// confidence is count(X ∪ Y) / count(X), both taken from one store.
struct Rule {
  Itemset antecedent;
  Itemset consequent;
  Count support_count = 0;
  Rational confidence;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend bool operator<(const Rule& a, const Rule& b) {
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  }
};

/// Largest itemset whose antecedents are enumerated.
inline constexpr std::size_t kMaxRuleItemsetSize = 20;

/// Every rule X -> Z∖X with Z stored, |Z| >= 2, X a non-empty proper subset
/// of Z and confidence >= minconf. Sorted by (antecedent, consequent).
/// Throws MissingSubsetCount when an antecedent is absent from the store,
/// InvalidParams when a stored itemset exceeds kMaxRuleItemsetSize.
std::vector<Rule> generate_rules(const FrequentSetStore& f, const Threshold& minconf);

}  // namespace imsc
