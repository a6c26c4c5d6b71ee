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

// Incremental maintenance of a frequent-itemset store under a support
// threshold change.
//
// Given F, the itemsets frequent at s in BD (|BD| = D), and an increment bd
// (|bd| = d), the maintainers compute F', the itemsets frequent at s' in
// BD ∪ bd, reusing F's BD counts and returning to BD only for candidates
// that could still become frequent.
//
// An itemset outside F occurs at most m_s - 1 times in BD, where
// m_s = max(ceil(s·D), 1) is the smallest frequent count. To reach s' in
// BD ∪ bd it therefore needs at least
//
//     cpt = s'·(D + d) - m_s + 1
//
// occurrences in bd (the candidate pruning threshold). When s·D is a
// positive integer this is s'·d + (s' - s)·D + 1. The sign of cpt and its
// position relative to d select one of three procedures:
//
//     cpt <= 0       no itemset of F can drop out; every candidate needs BD
//     0 < cpt <= d   mixed: candidates below cpt in bd are discarded
//     cpt > d        nothing outside F can become frequent; BD is not read

#include "imsc/itemset.hpp"
#include "imsc/rational.hpp"
#include "imsc/store.hpp"
#include "imsc/transaction_db.hpp"

#include <cstdint>
#include <set>
#include <string_view>

namespace imsc {

enum class Scenario { NoLosersPossible, Mixed, NoWinnersPossible };

/// "no_losers", "mixed", "no_winners".
std::string_view to_string(Scenario scenario);

/// Candidate pruning threshold s'·(D+d) - max(ceil(s·D), 1) + 1, exact.
Rational compute_cpt(const Threshold& s, const Threshold& s_prime, Count big_d, Count little_d);

Scenario classify_scenario(const Rational& cpt, Count little_d);

struct MaintenancePlan {
  Rational cpt;
  Rational min_supp;  // s'·(D + d)
  Scenario scenario = Scenario::Mixed;
  Threshold s;
  Threshold s_prime;
  Count big_d = 0;
  Count little_d = 0;
};

MaintenancePlan make_plan(const Threshold& s, const Threshold& s_prime, Count big_d, Count little_d);

struct MaintenanceStats {
  std::uint64_t big_db_passes = 0;
  std::uint64_t inc_db_passes = 0;
  std::uint64_t candidates_generated = 0;  // itemsets outside F whose bd count was taken
  std::uint64_t candidates_pruned = 0;     // of those, dropped by cpt before BD was read
  std::size_t levels = 0;
};

struct MaintenanceResult {
  FrequentSetStore store;
  MaintenancePlan plan;
  MaintenanceStats stats;
};

struct MaintainOptions {
  /// Recount a sample of F against BD before maintaining. The validation
  /// pass is recorded on BD's ledger but not in MaintenanceStats.
  bool validate = true;
  std::size_t validation_sample = 32;
  std::uint64_t validation_seed = 0x1A2B3C4D5E6F7788ull;
};

/// Builds the plan from (F's threshold, s', |BD|, |bd|) and runs the
/// matching procedure. Throws InconsistentStore when F does not describe BD.
MaintenanceResult maintain(const FrequentSetStore& f, const TransactionDB& big_db, const TransactionDB& inc_db,
                           const Threshold& s_prime, const MaintainOptions& options = {});

/// 0 < cpt <= d.
FrequentSetStore imsc_mixed(const FrequentSetStore& f, const TransactionDB& big_db, const TransactionDB& inc_db,
                            const MaintenancePlan& plan, MaintenanceStats* stats = nullptr);

/// cpt <= 0. Every itemset of F stays frequent; candidates are counted in
/// both databases without cpt pruning.
FrequentSetStore imsc_no_losers(const FrequentSetStore& f, const TransactionDB& big_db,
                                const TransactionDB& inc_db, const MaintenancePlan& plan,
                                MaintenanceStats* stats = nullptr);

/// cpt > d. Re-filters F using bd counts only; BD is never scanned.
FrequentSetStore imsc_no_winners(const FrequentSetStore& f, const TransactionDB& big_db,
                                 const TransactionDB& inc_db, const MaintenancePlan& plan,
                                 MaintenanceStats* stats = nullptr);

struct ItemsetClassification {
  std::set<Itemset> winners;      // in F' only
  std::set<Itemset> persistents;  // in both
  std::set<Itemset> losers;       // in F only
};

ItemsetClassification classify_itemsets(const FrequentSetStore& f_old, const FrequentSetStore& f_new);

}  // namespace imsc
