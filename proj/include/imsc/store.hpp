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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace imsc {

/// Frequent itemsets of one database at one threshold, with absolute
/// support counts, organized by level (itemset size, starting at 1).
///
/// Invariants (checked by validate()):
///  - every itemset at level k has size k
///  - downward closure: every (k-1)-subset of a stored k-itemset is stored
///  - every count is >= base_threshold × base_cardinality and > 0
///  - count(Y) >= count(X) whenever Y ⊂ X are both stored
class FrequentSetStore {
public:
  using Level = std::map<Itemset, Count>;

  FrequentSetStore() = default;
  FrequentSetStore(Count base_cardinality, Threshold base_threshold)
      : base_cardinality_(base_cardinality), base_threshold_(base_threshold) {}

  Count base_cardinality() const { return base_cardinality_; }
  const Threshold& base_threshold() const { return base_threshold_; }

  /// Highest non-empty level; 0 for an empty store.
  std::size_t max_level() const { return levels_.size(); }
  /// Level k (1-based); empty when k is out of range.
  const Level& level(std::size_t k) const;

  /// Replaces the level of the given size. Trailing empty levels are dropped.
  void set_level(std::size_t k, Level itemsets);
  void insert(const Itemset& itemset, Count count);

  std::optional<Count> find(const Itemset& itemset) const;
  bool contains(const Itemset& itemset) const { return find(itemset).has_value(); }

  /// Total number of stored itemsets.
  std::size_t size() const;
  bool empty() const { return levels_.empty(); }

  /// All stored itemsets, ordered by (size, ids).
  std::vector<std::pair<Itemset, Count>> entries() const;
  std::set<Itemset> itemsets() const;

  /// Throws InvariantViolation naming the first offending itemset.
  void validate(const ItemDictionary* dict = nullptr) const;

  friend bool operator==(const FrequentSetStore&, const FrequentSetStore&) = default;

private:
  void trim();

  Count base_cardinality_ = 0;
  Threshold base_threshold_;
  std::vector<Level> levels_;
};

/// Human-readable "{A:7, AB:4}"-style rendering; items joined by spaces
/// when tokens are longer than one character.
std::string describe(const FrequentSetStore& store, const ItemDictionary& dict);

}  // namespace imsc
