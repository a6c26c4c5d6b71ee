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

// Synthetic market-basket data in the style of the IBM Quest generator
// (the "T5.I2.D100K" family), simplified:
//
//  * n_patterns potential itemsets are drawn first. Sizes are Poisson around
//    avg_pattern_len (at least 1). Each pattern reuses an exponentially
//    distributed fraction (mean 1/2) of the previous pattern's items; the
//    rest are uniform over n_items.
//  * Each pattern gets an exponentially distributed pick weight (mean 1,
//    normalized) and a corruption level drawn from N(corruption_mean, 0.1)
//    clamped to [0, 1].
//  * A transaction has a Poisson(avg_tx_len) target size (at least 1) and is
//    filled by weighted pattern picks. A picked pattern loses items from the
//    end of its (randomly ordered) item list while a uniform draw is below
//    its corruption level. A pattern that would overflow the target is added
//    anyway half the time and otherwise carried into the next transaction.
//
// No item taxonomy. Items are labelled "0" .. "n_items-1".
//
// The random stream is std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Uniform, Poisson, exponential and normal variates are
// derived from its raw output here rather than through <random>
// distributions, whose algorithms are implementation-defined. Identical
// parameters and seed therefore give identical databases everywhere.

#include "imsc/itemset.hpp"
#include "imsc/transaction_db.hpp"

#include <cstdint>

namespace imsc {

struct GenParams {
  std::uint64_t n_transactions = 100000;
  double avg_tx_len = 5.0;
  double avg_pattern_len = 2.0;
  std::uint64_t n_patterns = 2000;
  std::uint64_t n_items = 1000;
  double corruption_mean = 0.5;
  std::uint64_t seed = 0;
};

/// Throws InvalidParams for non-positive lengths/counts or a corruption mean
/// outside [0, 1]. n_transactions may be 0.
void validate(const GenParams& p);

/// Interns item labels into `dict`.
TransactionDB generate_db(const GenParams& p, ItemDictionary& dict);

}  // namespace imsc
