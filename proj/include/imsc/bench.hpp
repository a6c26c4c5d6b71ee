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

// Threshold-sweep harness: incremental maintenance against an Apriori
// re-mine of BD ∪ bd, one row per maintenance threshold.

#include "imsc/maintain.hpp"
#include "imsc/rational.hpp"
#include "imsc/transaction_db.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace imsc {

struct BenchRow {
  Threshold s_prime;
  Rational cpt;
  Scenario scenario = Scenario::Mixed;
  double imsc_millis = 0.0;     // median over repeats
  double apriori_millis = 0.0;  // median over repeats
  std::uint64_t imsc_bd_passes = 0;
  std::uint64_t imsc_inc_passes = 0;
  std::uint64_t candidates_generated = 0;
  std::uint64_t candidates_pruned = 0;
  std::uint64_t frequent_count = 0;
};

struct BenchOptions {
  int repeats = 3;
};

/// Inclusive "LO:HI:STEP" sweep, e.g. "5%:60%:5%" -> 5%, 10%, ..., 60%.
/// Throws UsageError on bad syntax, a non-positive step or LO > HI.
std::vector<Threshold> parse_sweep(std::string_view text);

/// Mines F at s on big_db once (untimed), then for every s' in `sweep` times
/// maintain(F, big_db, inc_db, s') and mine_apriori(big_db ∪ inc_db, s').
/// Throws Error if the two results differ. Rows follow sweep order.
std::vector<BenchRow> run_bench(const TransactionDB& big_db, const TransactionDB& inc_db, const Threshold& s,
                                const std::vector<Threshold>& sweep, const BenchOptions& options = {});

}  // namespace imsc
