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

#include "imsc/apriori.hpp"

#include "imsc/error.hpp"
#include "imsc/support.hpp"

#include <algorithm>
#include <set>
#include <span>

namespace imsc {

std::vector<Itemset> CandidateSet::itemsets() const {
  std::vector<Itemset> out;
  out.reserve(candidates.size());
  for (const auto& [s, c] : candidates) out.push_back(s);
  return out;
}

namespace {

bool lex_less(std::span<const ItemId> a, std::span<const ItemId> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// `prev` is sorted, duplicate-free and uniform in size.
CandidateSet join_and_prune(std::span<const Itemset> prev) {
  CandidateSet out;
  if (prev.empty()) return out;
  const std::size_t km1 = prev.front().size();
  out.level = km1 + 1;

  auto member = [&](std::span<const ItemId> probe) {
    auto it = std::lower_bound(prev.begin(), prev.end(), probe,
                               [](const Itemset& a, std::span<const ItemId> b) { return lex_less(a.items(), b); });
    return it != prev.end() && std::equal(probe.begin(), probe.end(), it->begin(), it->end());
  };

  std::vector<ItemId> joined(km1 + 1);
  std::vector<ItemId> subset(km1);
  // Sorted order groups itemsets by their (k-2)-prefix into contiguous runs.
  for (std::size_t i = 0; i < prev.size(); ++i) {
    auto pi = prev[i].items();
    for (std::size_t j = i + 1; j < prev.size(); ++j) {
      auto pj = prev[j].items();
      if (!std::equal(pi.begin(), pi.end() - 1, pj.begin())) break;

      std::copy(pi.begin(), pi.end(), joined.begin());
      joined.back() = pj.back();

      bool all_subsets = true;
      // The two subsets dropping one of the last two items are prev[i], prev[j].
      for (std::size_t drop = 0; drop + 2 < joined.size() && all_subsets; ++drop) {
        std::copy(joined.begin(), joined.begin() + drop, subset.begin());
        std::copy(joined.begin() + drop + 1, joined.end(), subset.begin() + drop);
        all_subsets = member(subset);
      }
      // Candidates come out in ascending order.
      if (all_subsets) out.candidates.emplace_hint(out.candidates.end(), Itemset::from_sorted(joined), 0);
    }
  }
  return out;
}

}  // namespace

CandidateSet apriori_gen(const std::vector<Itemset>& prev_frequent) {
  std::vector<Itemset> prev = prev_frequent;
  std::sort(prev.begin(), prev.end());
  prev.erase(std::unique(prev.begin(), prev.end()), prev.end());
  return join_and_prune(prev);
}

CandidateSet apriori_gen(const FrequentSetStore::Level& prev_frequent) {
  std::vector<Itemset> prev;
  prev.reserve(prev_frequent.size());
  for (const auto& [s, c] : prev_frequent) prev.push_back(s);
  return join_and_prune(prev);
}

FrequentSetStore mine_apriori(const TransactionDB& db, const Threshold& s) {
  FrequentSetStore store(db.cardinality(), s);
  const Count min_count = min_frequent_count(s, db.cardinality());

  FrequentSetStore::Level current;
  auto item_counts = count_items(db);
  for (ItemId item = 0; item < item_counts.size(); ++item) {
    if (item_counts[item] >= min_count) current.emplace(Itemset::from_sorted({item}), item_counts[item]);
  }

  for (std::size_t k = 1; !current.empty(); ++k) {
    store.set_level(k, current);
    CandidateSet candidates = apriori_gen(current);
    current.clear();
    if (candidates.empty()) break;

    auto targets = candidates.itemsets();
    auto counts = count_supports(db, targets);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (counts[i] >= min_count) current.emplace_hint(current.end(), std::move(targets[i]), counts[i]);
    }
  }
  return store;
}

FrequentSetStore mine_bruteforce(const TransactionDB& db, const Threshold& s) {
  std::set<ItemId> universe;
  for (const auto& t : db.transactions()) universe.insert(t.items.begin(), t.items.end());
  if (universe.size() > kBruteforceMaxItems) {
    throw UniverseTooLarge("brute-force miner supports at most " + std::to_string(kBruteforceMaxItems) +
                           " distinct items, got " + std::to_string(universe.size()));
  }

  // Every non-empty subset of every transaction.
  std::set<Itemset> occurring;
  for (const auto& t : db.transactions()) {
    auto items = t.items.items();
    const std::uint32_t n = static_cast<std::uint32_t>(items.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<ItemId> sub;
      for (std::uint32_t b = 0; b < n; ++b) {
        if (mask & (1u << b)) sub.push_back(items[b]);
      }
      occurring.insert(Itemset::from_sorted(std::move(sub)));
    }
  }

  FrequentSetStore store(db.cardinality(), s);
  for (const auto& x : occurring) {
    Count count = 0;
    for (const auto& t : db.transactions()) {
      if (is_subset(x, t.items)) ++count;
    }
    if (count > 0 && meets_threshold(count, s, db.cardinality())) store.insert(x, count);
  }
  return store;
}

}  // namespace imsc
