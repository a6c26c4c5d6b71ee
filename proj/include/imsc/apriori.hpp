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
#include "imsc/transaction_db.hpp"

#include <map>
#include <vector>

namespace imsc {

/// Candidate k-itemsets with running support counts (all start at 0).
struct CandidateSet {
  std::size_t level = 0;
  std::map<Itemset, Count> candidates;

  std::size_t size() const { return candidates.size(); }
  bool empty() const { return candidates.empty(); }
  std::vector<Itemset> itemsets() const;
};

/// Apriori candidate generation over frequent (k-1)-itemsets.
///
/// Join: two members sharing their first k-2 items (ascending id order)
/// produce their k-item union. Prune: a joined itemset survives only if all
/// of its (k-1)-subsets are members. An empty input yields an empty set;
/// `level` is then 0.
CandidateSet apriori_gen(const std::vector<Itemset>& prev_frequent);
CandidateSet apriori_gen(const FrequentSetStore::Level& prev_frequent);

/// Level-wise Apriori: every itemset with count >= s × |db| (and > 0), with
/// exact counts. Level-1 candidates are the items present in db.
FrequentSetStore mine_apriori(const TransactionDB& db, const Threshold& s);

/// Universe guard of mine_bruteforce.
inline constexpr std::size_t kBruteforceMaxItems = 24;

/// Test oracle: enumerates every itemset occurring in some transaction and
/// counts it by exhaustive subset testing against every transaction.
/// Throws UniverseTooLarge with more than kBruteforceMaxItems distinct items.
FrequentSetStore mine_bruteforce(const TransactionDB& db, const Threshold& s);

}  // namespace imsc
