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

// Support counting kernels. Each entry point performs exactly one full pass
// over the database and records it on the database's scan ledger.
//
// The default entry points split the transactions across OpenMP threads and
// sum per-thread integer counters, so results do not depend on the thread
// count or the partitioning. The *_serial variants run the same per-
// transaction logic on one thread and are kept as the reference the
// parallel kernels are tested and benchmarked against.

#include "imsc/itemset.hpp"
#include "imsc/rational.hpp"
#include "imsc/transaction_db.hpp"

#include <map>
#include <memory>
#include <span>
#include <vector>

namespace imsc {

/// A target set compiled once and counted against any number of databases.
class SupportCounter {
public:
  explicit SupportCounter(std::span<const Itemset> targets);
  ~SupportCounter();
  SupportCounter(SupportCounter&&) noexcept;
  SupportCounter& operator=(SupportCounter&&) noexcept;

  /// Support of each target in `db`, aligned with the constructor's targets.
  std::vector<Count> count(const TransactionDB& db) const;
  std::vector<Count> count_serial(const TransactionDB& db) const;

private:
  class Plan;
  std::unique_ptr<Plan> plan_;
};

/// Support of each target, aligned with `targets`. Targets may mix sizes
/// and may repeat; the empty itemset counts every transaction.
std::vector<Count> count_supports(const TransactionDB& db, std::span<const Itemset> targets);
std::vector<Count> count_supports_serial(const TransactionDB& db, std::span<const Itemset> targets);

/// Map form of count_supports.
std::map<Itemset, Count> support_map(const TransactionDB& db, std::span<const Itemset> targets);

/// Occurrence count of every item id below db.item_bound().
std::vector<Count> count_items(const TransactionDB& db);
std::vector<Count> count_items_serial(const TransactionDB& db);

/// Databases smaller than this are counted on the calling thread even by
/// the parallel kernels.
inline constexpr std::size_t kParallelCutoff = 4096;

}  // namespace imsc
