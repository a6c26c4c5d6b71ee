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

#include "imsc/rules.hpp"

#include "imsc/error.hpp"

#include <algorithm>

namespace imsc {

std::vector<Rule> generate_rules(const FrequentSetStore& f, const Threshold& minconf) {
  std::vector<Rule> rules;
  for (std::size_t k = 2; k <= f.max_level(); ++k) {
    if (k > kMaxRuleItemsetSize) {
      throw InvalidParams("itemsets of size " + std::to_string(k) + " exceed the rule generation limit of " +
                          std::to_string(kMaxRuleItemsetSize));
    }
    for (const auto& [whole, count] : f.level(k)) {
      const auto items = whole.items();
      const std::uint32_t full = (1u << k) - 1;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<ItemId> lhs;
        std::vector<ItemId> rhs;
        for (std::size_t b = 0; b < k; ++b) (mask & (1u << b) ? lhs : rhs).push_back(items[b]);
        Itemset antecedent = Itemset::from_sorted(std::move(lhs));
        auto lhs_count = f.find(antecedent);
        if (!lhs_count || *lhs_count == 0) {
          throw MissingSubsetCount("store has no count for a subset of a stored " + std::to_string(k) +
                                   "-itemset");
        }
        // count / lhs_count >= minconf, by cross-multiplication.
        using wide = unsigned __int128;
        if (static_cast<wide>(count) * static_cast<wide>(minconf.denominator()) <
            static_cast<wide>(minconf.numerator()) * static_cast<wide>(*lhs_count)) {
          continue;
        }
        rules.push_back(Rule{std::move(antecedent), Itemset::from_sorted(std::move(rhs)), count,
                             Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(*lhs_count))});
      }
    }
  }
  std::sort(rules.begin(), rules.end());
  return rules;
}

}  // namespace imsc
