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

// Text formats.
//
// Transactions: one per line, whitespace-separated item tokens. Blank lines
// and lines starting with '#' are skipped. A leading token ending in ':' is
// the transaction id ("11: A B D").
//
// Frequent-set store (.fis):
//
//     !version 1
//     !D 10
//     !minsup 3/10
//     7<TAB>A
//     4<TAB>A B
//
// Body lines are "<count>\t<tokens>", tokens in canonical (id) order joined
// by single spaces, sorted by itemset size and then by token sequence.
//
// Rules: "<support>\t<num>/<den>\t<antecedent tokens> => <consequent tokens>"
// in generate_rules order.
//
// Bench CSV: see kBenchCsvHeader.

#include "imsc/bench.hpp"
#include "imsc/itemset.hpp"
#include "imsc/rules.hpp"
#include "imsc/store.hpp"
#include "imsc/transaction_db.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace imsc {

inline constexpr int kFisFormatVersion = 1;

inline constexpr std::string_view kBenchCsvHeader =
    "s_prime_num,s_prime_den,cpt_num,cpt_den,scenario,imsc_ms,apriori_ms,imsc_bd_passes,imsc_inc_passes,"
    "candidates_generated,candidates_pruned,frequent_count";

/// `source` names the input in MalformedLine messages.
TransactionDB read_transactions(std::istream& in, ItemDictionary& dict, const std::string& source = "<stream>");
void write_transactions(std::ostream& out, const TransactionDB& db, const ItemDictionary& dict);
TransactionDB load_transactions(const std::filesystem::path& path, ItemDictionary& dict);
void save_transactions(const TransactionDB& db, const ItemDictionary& dict, const std::filesystem::path& path);

/// Throws MalformedLine on syntax errors and InvariantViolation when the
/// loaded store breaks a store invariant.
FrequentSetStore read_fis(std::istream& in, ItemDictionary& dict, const std::string& source = "<stream>");
void write_fis(std::ostream& out, const FrequentSetStore& store, const ItemDictionary& dict);
FrequentSetStore load_fis(const std::filesystem::path& path, ItemDictionary& dict);
void save_fis(const FrequentSetStore& store, const ItemDictionary& dict, const std::filesystem::path& path);

void write_rules(std::ostream& out, const std::vector<Rule>& rules, const ItemDictionary& dict);
void save_rules(const std::vector<Rule>& rules, const ItemDictionary& dict, const std::filesystem::path& path);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::filesystem::path& path);

}  // namespace imsc
