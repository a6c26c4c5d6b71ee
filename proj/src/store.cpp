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

#include "imsc/store.hpp"

#include "imsc/error.hpp"

namespace imsc {

namespace {

const FrequentSetStore::Level kEmptyLevel;

std::string name_of(const Itemset& s, const ItemDictionary* dict) {
  if (dict) return "{" + dict->format(s) + "}";
  std::string out = "{";
  for (ItemId id : s) {
    if (out.size() > 1) out += ' ';
    out += '#' + std::to_string(id);
  }
  return out + "}";
}

}  // namespace

const FrequentSetStore::Level& FrequentSetStore::level(std::size_t k) const {
  if (k == 0 || k > levels_.size()) return kEmptyLevel;
  return levels_[k - 1];
}

void FrequentSetStore::set_level(std::size_t k, Level itemsets) {
  if (k == 0) throw InvariantViolation("level 0 cannot be stored");
  if (levels_.size() < k) levels_.resize(k);
  levels_[k - 1] = std::move(itemsets);
  trim();
}

void FrequentSetStore::insert(const Itemset& itemset, Count count) {
  if (itemset.empty()) throw InvariantViolation("the empty itemset cannot be stored");
  if (levels_.size() < itemset.size()) levels_.resize(itemset.size());
  levels_[itemset.size() - 1][itemset] = count;
}

std::optional<Count> FrequentSetStore::find(const Itemset& itemset) const {
  const Level& lvl = level(itemset.size());
  if (auto it = lvl.find(itemset); it != lvl.end()) return it->second;
  return std::nullopt;
}

std::size_t FrequentSetStore::size() const {
  std::size_t n = 0;
  for (const auto& lvl : levels_) n += lvl.size();
  return n;
}

std::vector<std::pair<Itemset, Count>> FrequentSetStore::entries() const {
  std::vector<std::pair<Itemset, Count>> out;
  out.reserve(size());
  for (const auto& lvl : levels_) out.insert(out.end(), lvl.begin(), lvl.end());
  return out;
}

std::set<Itemset> FrequentSetStore::itemsets() const {
  std::set<Itemset> out;
  for (const auto& lvl : levels_) {
    for (const auto& [s, c] : lvl) out.insert(s);
  }
  return out;
}

void FrequentSetStore::validate(const ItemDictionary* dict) const {
  for (std::size_t k = 1; k <= levels_.size(); ++k) {
    for (const auto& [itemset, count] : levels_[k - 1]) {
      if (itemset.size() != k) {
        throw InvariantViolation(name_of(itemset, dict) + " stored at level " + std::to_string(k));
      }
      if (count == 0 || !meets_threshold(count, base_threshold_, base_cardinality_)) {
        throw InvariantViolation(name_of(itemset, dict) + " has count " + std::to_string(count) +
                                 " below the store threshold " + to_string(base_threshold_) + " of " +
                                 std::to_string(base_cardinality_));
      }
      if (k == 1) continue;
      for (std::size_t drop = 0; drop < k; ++drop) {
        Itemset sub = itemset.without(drop);
        auto sub_count = find(sub);
        if (!sub_count) {
          throw InvariantViolation(name_of(itemset, dict) + " is stored but its subset " + name_of(sub, dict) +
                                   " is not (downward closure)");
        }
        if (*sub_count < count) {
          throw InvariantViolation(name_of(itemset, dict) + " has count " + std::to_string(count) +
                                   " above its subset " + name_of(sub, dict) + " (" + std::to_string(*sub_count) +
                                   ")");
        }
      }
    }
  }
}

void FrequentSetStore::trim() {
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
}

std::string describe(const FrequentSetStore& store, const ItemDictionary& dict) {
  std::string out = "{";
  for (const auto& [itemset, count] : store.entries()) {
    if (out.size() > 1) out += ", ";
    bool compact = true;
    for (ItemId id : itemset) compact = compact && dict.token(id).size() == 1;
    if (compact) {
      for (ItemId id : itemset) out += dict.token(id);
    } else {
      out += dict.format(itemset);
    }
    out += ':' + std::to_string(count);
  }
  return out + "}";
}

}  // namespace imsc
