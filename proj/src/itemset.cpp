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

#include "imsc/itemset.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <iterator>

namespace imsc {

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset Itemset::from_sorted(std::vector<ItemId> items) {
  Itemset s;
  s.items_ = std::move(items);
  return s;
}

Itemset Itemset::without(std::size_t pos) const {
  std::vector<ItemId> out;
  out.reserve(items_.size() - 1);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i != pos) out.push_back(items_[i]);
  }
  return from_sorted(std::move(out));
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept { return (*this)(s.items()); }

std::size_t ItemsetHash::operator()(std::span<const ItemId> items) const noexcept {
  return boost::hash_range(items.begin(), items.end());
}

bool is_subset(std::span<const ItemId> x, std::span<const ItemId> t) {
  if (x.size() > t.size()) return false;
  auto ti = t.begin();
  for (ItemId item : x) {
    while (ti != t.end() && *ti < item) ++ti;
    if (ti == t.end() || *ti != item) return false;
    ++ti;
  }
  return true;
}

Itemset set_union(const Itemset& a, const Itemset& b) {
  std::vector<ItemId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Itemset::from_sorted(std::move(out));
}

Itemset set_difference(const Itemset& a, const Itemset& b) {
  std::vector<ItemId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Itemset::from_sorted(std::move(out));
}

ItemId ItemDictionary::intern(std::string_view token) {
  std::string key(token);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  auto id = static_cast<ItemId>(tokens_.size());
  tokens_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<ItemId> ItemDictionary::find(std::string_view token) const {
  if (auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string_view> ItemDictionary::sorted_tokens(const Itemset& s) const {
  std::vector<std::string_view> out;
  out.reserve(s.size());
  for (ItemId id : s) out.push_back(token(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ItemDictionary::format(const Itemset& s) const {
  std::string out;
  for (auto t : sorted_tokens(s)) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

Itemset canonical_itemset(std::span<const std::string> tokens, ItemDictionary& dict) {
  std::vector<ItemId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(dict.intern(t));
  return Itemset(std::move(ids));
}

Itemset canonical_itemset(std::initializer_list<std::string_view> tokens, ItemDictionary& dict) {
  std::vector<ItemId> ids;
  for (auto t : tokens) ids.push_back(dict.intern(t));
  return Itemset(std::move(ids));
}

}  // namespace imsc
