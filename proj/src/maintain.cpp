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

#include "imsc/maintain.hpp"

#include "imsc/apriori.hpp"
#include "imsc/error.hpp"
#include "imsc/support.hpp"

#include <algorithm>
#include <iterator>
#include <random>

namespace imsc {

namespace {

// Ledger deltas of one procedure run, folded into the caller's stats.
class PassMeter {
public:
  PassMeter(const TransactionDB& big, const TransactionDB& inc, MaintenanceStats* stats)
      : big_(big), inc_(inc), stats_(stats), big0_(big.scan_count()), inc0_(inc.scan_count()) {}
  ~PassMeter() {
    if (stats_) {
      stats_->big_db_passes += big_.scan_count() - big0_;
      stats_->inc_db_passes += inc_.scan_count() - inc0_;
    }
  }

private:
  const TransactionDB& big_;
  const TransactionDB& inc_;
  MaintenanceStats* stats_;
  std::uint64_t big0_;
  std::uint64_t inc0_;
};

void require(const MaintenancePlan& plan, Scenario expected) {
  if (plan.scenario != expected) {
    throw InvalidParams("plan scenario is " + std::string(to_string(plan.scenario)) + ", procedure handles " +
                        std::string(to_string(expected)));
  }
}

Count item_count(const std::vector<Count>& counts, ItemId item) {
  return item < counts.size() ? counts[item] : 0;
}

// Level k of F (BD counts known) and the generated candidates outside it.
// Stored itemsets that were not generated have an infrequent subset and
// fail the min_supp test on their own, so they need no special casing.
struct LevelSplit {
  std::vector<Itemset> targets;  // stored itemsets first, then fresh ones
  std::vector<Count> known_big;  // BD counts of the stored prefix
  std::size_t n_known() const { return known_big.size(); }
  std::size_t n_fresh() const { return targets.size() - known_big.size(); }
};

LevelSplit split_level(CandidateSet&& generated, const FrequentSetStore::Level& stored) {
  LevelSplit out;
  out.targets.reserve(stored.size() + generated.candidates.size());
  for (const auto& [itemset, count] : stored) {
    out.targets.push_back(itemset);
    out.known_big.push_back(count);
  }
  // Both sides are sorted, so membership is a merge walk.
  auto it = stored.begin();
  while (!generated.candidates.empty()) {
    auto node = generated.candidates.extract(generated.candidates.begin());
    while (it != stored.end() && it->first < node.key()) ++it;
    if (it != stored.end() && it->first == node.key()) continue;
    out.targets.push_back(std::move(node.key()));
  }
  return out;
}

}  // namespace

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::NoLosersPossible: return "no_losers";
    case Scenario::Mixed: return "mixed";
    case Scenario::NoWinnersPossible: return "no_winners";
  }
  return "unknown";
}

Rational compute_cpt(const Threshold& s, const Threshold& s_prime, Count big_d, Count little_d) {
  const auto min_old = static_cast<std::int64_t>(min_frequent_count(s, big_d));
  return s_prime.times(big_d + little_d) - Rational(min_old) + Rational(1);
}

Scenario classify_scenario(const Rational& cpt, Count little_d) {
  if (cpt <= Rational(0)) return Scenario::NoLosersPossible;
  if (cpt > Rational(static_cast<std::int64_t>(little_d))) return Scenario::NoWinnersPossible;
  return Scenario::Mixed;
}

MaintenancePlan make_plan(const Threshold& s, const Threshold& s_prime, Count big_d, Count little_d) {
  MaintenancePlan plan;
  plan.cpt = compute_cpt(s, s_prime, big_d, little_d);
  plan.min_supp = s_prime.times(big_d + little_d);
  plan.scenario = classify_scenario(plan.cpt, little_d);
  plan.s = s;
  plan.s_prime = s_prime;
  plan.big_d = big_d;
  plan.little_d = little_d;
  return plan;
}

FrequentSetStore imsc_mixed(const FrequentSetStore& f, const TransactionDB& big_db, const TransactionDB& inc_db,
                            const MaintenancePlan& plan, MaintenanceStats* stats) {
  require(plan, Scenario::Mixed);
  PassMeter meter(big_db, inc_db, stats);
  MaintenanceStats local;

  const Count total = plan.big_d + plan.little_d;
  const Count min_count = min_frequent_count(plan.s_prime, total);
  const auto cpt_count = static_cast<Count>(ceil(plan.cpt));
  FrequentSetStore out(total, plan.s_prime);

  // Level 1: persistents from F1, candidates are the other items seen in bd.
  FrequentSetStore::Level next;
  {
    auto inc_items = count_items(inc_db);
    const auto& f1 = f.level(1);
    for (const auto& [itemset, big_count] : f1) {
      Count c = big_count + item_count(inc_items, itemset[0]);
      if (c >= min_count) next.emplace(itemset, c);
    }
    std::vector<Itemset> survivors;
    std::vector<Count> survivor_inc;
    for (ItemId item = 0; item < inc_items.size(); ++item) {
      if (inc_items[item] == 0) continue;
      Itemset single = Itemset::from_sorted({item});
      if (f1.contains(single)) continue;
      ++local.candidates_generated;
      if (inc_items[item] >= cpt_count) {
        survivors.push_back(std::move(single));
        survivor_inc.push_back(inc_items[item]);
      } else {
        ++local.candidates_pruned;
      }
    }
    if (!survivors.empty()) {
      auto big_counts = count_supports(big_db, survivors);
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        Count c = big_counts[i] + survivor_inc[i];
        if (c >= min_count) next.emplace(survivors[i], c);
      }
    }
  }

  std::size_t k = 1;
  while (!next.empty()) {
    out.set_level(k, next);
    ++k;
    CandidateSet generated = apriori_gen(next);
    next.clear();
    LevelSplit split = split_level(std::move(generated), f.level(k));
    if (split.targets.empty()) break;
    local.candidates_generated += split.n_fresh();

    const auto& targets = split.targets;
    auto inc_counts = count_supports(inc_db, targets);

    for (std::size_t i = 0; i < split.n_known(); ++i) {
      Count c = split.known_big[i] + inc_counts[i];
      if (c >= min_count) next.emplace_hint(next.end(), targets[i], c);
    }
    std::vector<Itemset> survivors;
    std::vector<Count> survivor_inc;
    for (std::size_t i = split.n_known(); i < targets.size(); ++i) {
      Count c = inc_counts[i];
      if (c >= cpt_count) {
        survivors.push_back(targets[i]);
        survivor_inc.push_back(c);
      } else {
        ++local.candidates_pruned;
      }
    }
    if (!survivors.empty()) {
      auto big_counts = count_supports(big_db, survivors);
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        Count c = big_counts[i] + survivor_inc[i];
        if (c >= min_count) next.emplace(survivors[i], c);
      }
    }
  }

  if (stats) {
    stats->candidates_generated += local.candidates_generated;
    stats->candidates_pruned += local.candidates_pruned;
    stats->levels = std::max(stats->levels, k);
  }
  return out;
}

FrequentSetStore imsc_no_losers(const FrequentSetStore& f, const TransactionDB& big_db,
                                const TransactionDB& inc_db, const MaintenancePlan& plan,
                                MaintenanceStats* stats) {
  require(plan, Scenario::NoLosersPossible);
  PassMeter meter(big_db, inc_db, stats);
  MaintenanceStats local;

  const Count total = plan.big_d + plan.little_d;
  const Count min_count = min_frequent_count(plan.s_prime, total);
  FrequentSetStore out(total, plan.s_prime);

  // Level 1: F1 is kept whole; every other item is counted over all of BD.
  FrequentSetStore::Level next;
  {
    auto inc_items = count_items(inc_db);
    const auto& f1 = f.level(1);
    for (const auto& [itemset, big_count] : f1) {
      next.emplace(itemset, big_count + item_count(inc_items, itemset[0]));
    }
    auto big_items = count_items(big_db);
    const auto bound = std::max(inc_items.size(), big_items.size());
    for (ItemId item = 0; item < bound; ++item) {
      Count c = item_count(big_items, item) + item_count(inc_items, item);
      if (c == 0) continue;
      Itemset single = Itemset::from_sorted({item});
      if (f1.contains(single)) continue;
      ++local.candidates_generated;
      if (c >= min_count) next.emplace(std::move(single), c);
    }
  }

  std::size_t k = 1;
  while (!next.empty()) {
    out.set_level(k, next);
    ++k;
    CandidateSet generated = apriori_gen(next);
    next.clear();
    LevelSplit split = split_level(std::move(generated), f.level(k));
    if (split.targets.empty()) break;
    local.candidates_generated += split.n_fresh();

    const auto& targets = split.targets;
    // One compiled plan serves both passes; the BD pass also sees the known
    // itemsets but their counts are ignored.
    SupportCounter counter(targets);
    auto inc_counts = counter.count(inc_db);

    for (std::size_t i = 0; i < split.n_known(); ++i) {
      next.emplace_hint(next.end(), targets[i], split.known_big[i] + inc_counts[i]);
    }
    if (split.n_fresh() > 0) {
      auto big_counts = counter.count(big_db);
      for (std::size_t i = split.n_known(); i < targets.size(); ++i) {
        Count c = big_counts[i] + inc_counts[i];
        if (c >= min_count) next.emplace(targets[i], c);
      }
    }
  }

  if (stats) {
    stats->candidates_generated += local.candidates_generated;
    stats->levels = std::max(stats->levels, k);
  }
  return out;
}

FrequentSetStore imsc_no_winners(const FrequentSetStore& f, const TransactionDB& big_db,
                                 const TransactionDB& inc_db, const MaintenancePlan& plan,
                                 MaintenanceStats* stats) {
  require(plan, Scenario::NoWinnersPossible);
  PassMeter meter(big_db, inc_db, stats);

  const Count total = plan.big_d + plan.little_d;
  const Count min_count = min_frequent_count(plan.s_prime, total);
  FrequentSetStore out(total, plan.s_prime);

  // An itemset is counted in bd only if its BD count plus d can still reach
  // the new minimum and all of its (k-1)-subsets survived.
  auto reachable = [&](Count big_count) { return big_count + plan.little_d >= min_count; };

  std::size_t k = 1;
  for (; k <= f.max_level(); ++k) {
    std::vector<std::pair<Itemset, Count>> targets;
    for (const auto& [itemset, big_count] : f.level(k)) {
      if (!reachable(big_count)) continue;
      bool closed = true;
      for (std::size_t drop = 0; closed && k > 1 && drop < k; ++drop) {
        closed = out.contains(itemset.without(drop));
      }
      if (closed) targets.emplace_back(itemset, big_count);
    }
    if (targets.empty()) break;

    std::vector<Count> inc_counts;
    if (k == 1) {
      auto items = count_items(inc_db);
      for (const auto& [itemset, c] : targets) inc_counts.push_back(itemset[0] < items.size() ? items[itemset[0]] : 0);
    } else {
      std::vector<Itemset> sets;
      sets.reserve(targets.size());
      for (const auto& [itemset, c] : targets) sets.push_back(itemset);
      inc_counts = count_supports(inc_db, sets);
    }

    FrequentSetStore::Level kept;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Count c = targets[i].second + inc_counts[i];
      if (c >= min_count) kept.emplace(targets[i].first, c);
    }
    if (kept.empty()) break;
    out.set_level(k, std::move(kept));
  }

  if (stats) stats->levels = std::max(stats->levels, k);
  return out;
}

MaintenanceResult maintain(const FrequentSetStore& f, const TransactionDB& big_db, const TransactionDB& inc_db,
                           const Threshold& s_prime, const MaintainOptions& options) {
  if (f.base_cardinality() != big_db.cardinality()) {
    throw InconsistentStore("store describes " + std::to_string(f.base_cardinality()) +
                            " transactions but the base database has " + std::to_string(big_db.cardinality()));
  }
  if (options.validate && !f.empty()) {
    try {
      f.validate();
    } catch (const InvariantViolation& e) {
      throw InconsistentStore(std::string("store is not a valid frequent-set store: ") + e.what());
    }
    auto entries = f.entries();
    std::vector<std::pair<Itemset, Count>> sample;
    std::mt19937_64 rng(options.validation_seed);
    std::sample(entries.begin(), entries.end(), std::back_inserter(sample), options.validation_sample, rng);
    std::vector<Itemset> targets;
    for (const auto& [itemset, c] : sample) targets.push_back(itemset);
    auto counts = count_supports(big_db, targets);
    for (std::size_t i = 0; i < sample.size(); ++i) {
      if (counts[i] != sample[i].second) {
        throw InconsistentStore("store records count " + std::to_string(sample[i].second) +
                                " for an itemset that occurs " + std::to_string(counts[i]) +
                                " times in the base database");
      }
    }
  }

  MaintenanceResult result;
  result.plan = make_plan(f.base_threshold(), s_prime, big_db.cardinality(), inc_db.cardinality());
  switch (result.plan.scenario) {
    case Scenario::Mixed:
      result.store = imsc_mixed(f, big_db, inc_db, result.plan, &result.stats);
      break;
    case Scenario::NoLosersPossible:
      result.store = imsc_no_losers(f, big_db, inc_db, result.plan, &result.stats);
      break;
    case Scenario::NoWinnersPossible:
      result.store = imsc_no_winners(f, big_db, inc_db, result.plan, &result.stats);
      break;
  }
  return result;
}

ItemsetClassification classify_itemsets(const FrequentSetStore& f_old, const FrequentSetStore& f_new) {
  auto old_sets = f_old.itemsets();
  auto new_sets = f_new.itemsets();
  ItemsetClassification out;
  std::set_difference(new_sets.begin(), new_sets.end(), old_sets.begin(), old_sets.end(),
                      std::inserter(out.winners, out.winners.end()));
  std::set_intersection(new_sets.begin(), new_sets.end(), old_sets.begin(), old_sets.end(),
                        std::inserter(out.persistents, out.persistents.end()));
  std::set_difference(old_sets.begin(), old_sets.end(), new_sets.begin(), new_sets.end(),
                      std::inserter(out.losers, out.losers.end()));
  return out;
}

}  // namespace imsc
