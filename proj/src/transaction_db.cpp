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

#include "imsc/transaction_db.hpp"

#include <algorithm>

namespace imsc {

TransactionDB::TransactionDB(std::vector<Transaction> transactions)
    : transactions_(std::move(transactions)) {
  for (const auto& t : transactions_) {
    if (!t.items.empty()) item_bound_ = std::max(item_bound_, t.items.items().back() + 1);
  }
}

TransactionDB::TransactionDB(std::vector<Itemset> transactions) {
  std::vector<Transaction> txs;
  txs.reserve(transactions.size());
  for (auto& items : transactions) txs.push_back({std::nullopt, std::move(items)});
  *this = TransactionDB(std::move(txs));
}

TransactionDB::TransactionDB(const TransactionDB& other)
    : transactions_(other.transactions_), item_bound_(other.item_bound_), scans_(other.scan_count()) {}

TransactionDB& TransactionDB::operator=(const TransactionDB& other) {
  if (this != &other) {
    transactions_ = other.transactions_;
    item_bound_ = other.item_bound_;
    scans_.store(other.scan_count());
  }
  return *this;
}

TransactionDB::TransactionDB(TransactionDB&& other) noexcept
    : transactions_(std::move(other.transactions_)), item_bound_(other.item_bound_),
      scans_(other.scan_count()) {}

TransactionDB& TransactionDB::operator=(TransactionDB&& other) noexcept {
  transactions_ = std::move(other.transactions_);
  item_bound_ = other.item_bound_;
  scans_.store(other.scan_count());
  return *this;
}

TransactionDB TransactionDB::slice(std::size_t first, std::size_t last) const {
  last = std::min(last, transactions_.size());
  first = std::min(first, last);
  return TransactionDB(std::vector<Transaction>(transactions_.begin() + first, transactions_.begin() + last));
}

TransactionDB concat(const TransactionDB& a, const TransactionDB& b) {
  std::vector<Transaction> all(a.transactions().begin(), a.transactions().end());
  all.insert(all.end(), b.transactions().begin(), b.transactions().end());
  return TransactionDB(std::move(all));
}

}  // namespace imsc
