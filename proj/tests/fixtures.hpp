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

// Shared fixtures and test-only oracles.
//
// BD10 is a ten-transaction database whose itemset counts are
// A7 B5 C6 D4 AB4 AC4 AD1 BC4 BD2 CD3 ABC3 (checked by brute force in
// test_fixtures.cpp). The two increments are the three-transaction batches
// {ABD, BD, BCD} and {AB, BC, C}.

#include "imsc/itemset.hpp"
#include "imsc/rational.hpp"
#include "imsc/store.hpp"
#include "imsc/transaction_db.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace imsc::testing {

/// Single-letter items: "ABD" -> {A, B, D}.
inline Itemset letters(ItemDictionary& dict, std::string_view s) {
  std::vector<ItemId> ids;
  for (char c : s) ids.push_back(dict.intern(std::string(1, c)));
  return Itemset(std::move(ids));
}

inline TransactionDB letter_db(ItemDictionary& dict, std::initializer_list<std::string_view> rows) {
  std::vector<Itemset> txs;
  for (auto r : rows) txs.push_back(letters(dict, r));
  return TransactionDB(std::move(txs));
}

struct Fixture {
  ItemDictionary dict;
  TransactionDB bd10;
  TransactionDB inc1;   // {ABD, BD, BCD}
  TransactionDB inc23;  // {AB, BC, C}

  Fixture() {
    // Intern A..D first so ids follow letter order.
    letters(dict, "ABCD");
    bd10 = letter_db(dict, {"ABC", "ABC", "ABCD", "AB", "AC", "BCD", "CD", "D", "A", "A"});
    inc1 = letter_db(dict, {"ABD", "BD", "BCD"});
    inc23 = letter_db(dict, {"AB", "BC", "C"});
  }

  Itemset operator()(std::string_view s) { return letters(dict, s); }

  /// Store from {"AB", 4} style entries.
  FrequentSetStore store(Count cardinality, Threshold thr,
                         std::initializer_list<std::pair<std::string_view, Count>> entries) {
    FrequentSetStore out(cardinality, thr);
    for (auto [s, c] : entries) out.insert(letters(dict, s), c);
    return out;
  }
};

/// Independent counting oracle: plain subset test per transaction, no
/// projection, hashing or threading.
inline Count naive_count(const TransactionDB& db, const Itemset& x) {
  Count n = 0;
  for (const auto& t : db.transactions()) {
    bool all = true;
    for (ItemId item : x) {
      bool found = false;
      for (ItemId have : t.items) found = found || have == item;
      all = all && found;
    }
    n += all ? 1 : 0;
  }
  return n;
}

/// Random database over `n_items` items (ids 0..n_items-1 interned as
/// "i0".."i<n>") with transaction lengths uniform in [0, max_len].
inline TransactionDB random_db(std::mt19937_64& rng, ItemDictionary& dict, std::size_t n_tx, std::size_t n_items,
                               std::size_t max_len) {
  for (std::size_t i = 0; i < n_items; ++i) dict.intern("i" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<ItemId> item(0, static_cast<ItemId>(n_items - 1));
  std::vector<Itemset> txs;
  for (std::size_t t = 0; t < n_tx; ++t) {
    std::vector<ItemId> ids;
    auto n = len(rng);
    for (std::size_t j = 0; j < n; ++j) ids.push_back(item(rng));
    txs.emplace_back(std::move(ids));
  }
  return TransactionDB(std::move(txs));
}

}  // namespace imsc::testing
