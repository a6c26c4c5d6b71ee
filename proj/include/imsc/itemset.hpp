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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace imsc {

/// Dense handle of an interned item token.
using ItemId = std::uint32_t;

/// A canonical set of items: strictly ascending ids, no duplicates.
/// Set equality is sequence equality.
class Itemset {
public:
  Itemset() = default;

  /// Sorts and deduplicates.
  explicit Itemset(std::vector<ItemId> items);
  Itemset(std::initializer_list<ItemId> items) : Itemset(std::vector<ItemId>(items)) {}

  /// Adopts an already canonical sequence without re-sorting.
  static Itemset from_sorted(std::vector<ItemId> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const ItemId> items() const { return items_; }
  ItemId operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// This itemset without the element at position `pos`.
  Itemset without(std::size_t pos) const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset&, const Itemset&) = default;

private:
  std::vector<ItemId> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept;
  std::size_t operator()(std::span<const ItemId> items) const noexcept;
};

/// True iff every item of `x` occurs in `t`. Merge walk, O(|x| + |t|).
bool is_subset(std::span<const ItemId> x, std::span<const ItemId> t);
inline bool is_subset(const Itemset& x, const Itemset& t) { return is_subset(x.items(), t.items()); }

/// Items ∪, ∖ over canonical itemsets.
Itemset set_union(const Itemset& a, const Itemset& b);
Itemset set_difference(const Itemset& a, const Itemset& b);

/// Bijective token <-> id interning. Ids are dense and assigned in
/// first-seen order.
class ItemDictionary {
public:
  ItemId intern(std::string_view token);
  std::optional<ItemId> find(std::string_view token) const;
  const std::string& token(ItemId id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }

  /// Tokens of `s` in byte order, so output does not depend on interning
  /// order.
  std::vector<std::string_view> sorted_tokens(const Itemset& s) const;
  /// sorted_tokens joined by single spaces.
  std::string format(const Itemset& s) const;

private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, ItemId> ids_;
};

/// Interns `tokens` and returns the canonical itemset.
Itemset canonical_itemset(std::span<const std::string> tokens, ItemDictionary& dict);
Itemset canonical_itemset(std::initializer_list<std::string_view> tokens, ItemDictionary& dict);

}  // namespace imsc
