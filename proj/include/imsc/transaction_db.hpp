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

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace imsc {

struct Transaction {
  std::optional<std::string> tid;  // carried through, never used in counting
  Itemset items;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// An ordered multiset of transactions plus a ledger of full passes.
///
/// The transactions are immutable once the database is built. The ledger is
/// the one mutable piece: every counting operation bumps it exactly once per
/// full pass, from any thread.
class TransactionDB {
public:
  TransactionDB() = default;
  explicit TransactionDB(std::vector<Transaction> transactions);
  explicit TransactionDB(std::vector<Itemset> transactions);

  TransactionDB(const TransactionDB& other);
  TransactionDB& operator=(const TransactionDB& other);
  TransactionDB(TransactionDB&& other) noexcept;
  TransactionDB& operator=(TransactionDB&& other) noexcept;

  Count cardinality() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }
  std::span<const Transaction> transactions() const { return transactions_; }
  const Transaction& operator[](std::size_t i) const { return transactions_[i]; }

  /// One past the largest item id occurring in any transaction.
  ItemId item_bound() const { return item_bound_; }

  std::uint64_t scan_count() const { return scans_.load(std::memory_order_relaxed); }
  void record_scan() const { scans_.fetch_add(1, std::memory_order_relaxed); }

  /// Transactions [first, last) as a new database with a fresh ledger.
  TransactionDB slice(std::size_t first, std::size_t last) const;

private:
  std::vector<Transaction> transactions_;
  ItemId item_bound_ = 0;
  mutable std::atomic<std::uint64_t> scans_{0};
};

/// BD ∪ bd: a's transactions followed by b's, with a fresh ledger.
TransactionDB concat(const TransactionDB& a, const TransactionDB& b);

}  // namespace imsc
