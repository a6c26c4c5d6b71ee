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

#include "imsc/support.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include <omp.h>

namespace imsc {

namespace {

constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();

// Open-addressing table over the distinct k-itemsets of one size class.
// Keys live in one flat array; the table stores key indices and stays at
// most half full.
class SizeClass {
public:
  explicit SizeClass(std::size_t k) : k_(k), table_(16, kEmptySlot), mask_(15) {}

  std::size_t k() const { return k_; }
  std::size_t size() const { return counter_of_.size(); }

  // Returns the key index; adds the key if new.
  std::uint32_t insert(std::span<const ItemId> key, std::uint32_t counter) {
    std::size_t h = slot_of(key);
    if (table_[h] != kEmptySlot) return table_[h];
    auto idx = static_cast<std::uint32_t>(counter_of_.size());
    keys_.insert(keys_.end(), key.begin(), key.end());
    counter_of_.push_back(counter);
    table_[h] = idx;
    if (2 * size() > table_.size()) grow();
    return idx;
  }

  // Counter slot of `key`, or kEmptySlot.
  std::uint32_t lookup(std::span<const ItemId> probe) const {
    std::uint32_t idx = table_[slot_of(probe)];
    return idx == kEmptySlot ? kEmptySlot : counter_of_[idx];
  }

  std::span<const ItemId> key(std::uint32_t idx) const {
    return std::span<const ItemId>(keys_).subspan(idx * k_, k_);
  }
  std::uint32_t counter(std::uint32_t idx) const { return counter_of_[idx]; }

private:
  // Slot holding `probe`, or the empty slot where it would go.
  std::size_t slot_of(std::span<const ItemId> probe) const {
    std::size_t h = ItemsetHash{}(probe) & mask_;
    while (true) {
      std::uint32_t idx = table_[h];
      if (idx == kEmptySlot) return h;
      auto candidate = key(idx);
      if (std::equal(candidate.begin(), candidate.end(), probe.begin())) return h;
      h = (h + 1) & mask_;
    }
  }

  void grow() {
    table_.assign(table_.size() * 2, kEmptySlot);
    mask_ = table_.size() - 1;
    for (std::uint32_t i = 0; i < size(); ++i) table_[slot_of(key(i))] = i;
  }

  std::size_t k_;
  std::vector<ItemId> keys_;
  std::vector<std::uint32_t> counter_of_;
  std::vector<std::uint32_t> table_;
  std::size_t mask_;
};

// n choose k, saturating at `cap`.
std::size_t choose_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Target set compiled for counting: distinct itemsets grouped by size, a
// relevance bitmap over items, and a dense index for 1-itemsets.
class CountingPlan {
public:
  explicit CountingPlan(std::span<const Itemset> targets) {
    target_counter_.reserve(targets.size());
    for (const auto& t : targets) {
      if (t.empty()) {
        if (empty_counter_ == kEmptySlot) empty_counter_ = n_counters_++;
        target_counter_.push_back(empty_counter_);
        continue;
      }
      for (ItemId item : t) {
        if (item >= relevant_.size()) relevant_.resize(item + 1, 0);
        relevant_[item] = 1;
      }
      if (t.size() == 1) {
        ItemId item = t[0];
        if (item >= singleton_.size()) singleton_.resize(item + 1, kEmptySlot);
        if (singleton_[item] == kEmptySlot) singleton_[item] = n_counters_++;
        target_counter_.push_back(singleton_[item]);
        continue;
      }
      SizeClass& cls = size_class(t.size());
      std::uint32_t before = static_cast<std::uint32_t>(cls.size());
      std::uint32_t idx = cls.insert(t.items(), n_counters_);
      if (idx == before) ++n_counters_;
      target_counter_.push_back(cls.counter(idx));
    }
    std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) { return a.k() < b.k(); });
  }

  std::size_t counters() const { return n_counters_; }

  struct Scratch {
    std::vector<ItemId> projected;
    std::vector<ItemId> combo;
    std::vector<std::size_t> pos;
  };

  void count(const Itemset& transaction, std::vector<Count>& counters, Scratch& s) const {
    if (empty_counter_ != kEmptySlot) ++counters[empty_counter_];

    auto& proj = s.projected;
    proj.clear();
    for (ItemId item : transaction) {
      if (item < relevant_.size() && relevant_[item]) proj.push_back(item);
    }
    if (proj.empty()) return;

    for (ItemId item : proj) {
      if (item < singleton_.size() && singleton_[item] != kEmptySlot) ++counters[singleton_[item]];
    }
    for (const auto& cls : classes_) {
      std::size_t k = cls.k();
      if (k > proj.size()) break;
      std::size_t combos = choose_capped(proj.size(), k, cls.size());
      if (combos <= cls.size()) {
        enumerate(cls, proj, counters, s);
      } else {
        for (std::uint32_t i = 0; i < cls.size(); ++i) {
          if (is_subset(cls.key(i), proj)) ++counters[cls.counter(i)];
        }
      }
    }
  }

  std::vector<Count> expand(const std::vector<Count>& counters) const {
    std::vector<Count> out(target_counter_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = counters[target_counter_[i]];
    return out;
  }

private:
  SizeClass& size_class(std::size_t k) {
    for (auto& cls : classes_) {
      if (cls.k() == k) return cls;
    }
    return classes_.emplace_back(k);
  }

  // Looks up every k-combination of the projected transaction.
  static void enumerate(const SizeClass& cls, const std::vector<ItemId>& proj, std::vector<Count>& counters,
                        Scratch& s) {
    std::size_t k = cls.k();
    std::size_t n = proj.size();
    s.pos.resize(k);
    s.combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.pos[i] = i;
    while (true) {
      for (std::size_t i = 0; i < k; ++i) s.combo[i] = proj[s.pos[i]];
      if (auto c = cls.lookup(s.combo); c != kEmptySlot) ++counters[c];
      std::size_t i = k;
      while (i > 0 && s.pos[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) return;
      ++s.pos[i - 1];
      for (std::size_t j = i; j < k; ++j) s.pos[j] = s.pos[j - 1] + 1;
    }
  }

  std::vector<SizeClass> classes_;
  std::vector<std::uint8_t> relevant_;
  std::vector<std::uint32_t> singleton_;
  std::vector<std::uint32_t> target_counter_;
  std::uint32_t empty_counter_ = kEmptySlot;
  std::uint32_t n_counters_ = 0;
};

}  // namespace

class SupportCounter::Plan : public CountingPlan {
public:
  using CountingPlan::CountingPlan;
};

SupportCounter::SupportCounter(std::span<const Itemset> targets) : plan_(std::make_unique<Plan>(targets)) {}
SupportCounter::~SupportCounter() = default;
SupportCounter::SupportCounter(SupportCounter&&) noexcept = default;
SupportCounter& SupportCounter::operator=(SupportCounter&&) noexcept = default;

std::vector<Count> SupportCounter::count_serial(const TransactionDB& db) const {
  const CountingPlan& plan = *plan_;
  std::vector<Count> counters(plan.counters(), 0);
  CountingPlan::Scratch scratch;
  for (const auto& t : db.transactions()) plan.count(t.items, counters, scratch);
  db.record_scan();
  return plan.expand(counters);
}

std::vector<Count> SupportCounter::count(const TransactionDB& db) const {
  const CountingPlan& plan = *plan_;
  std::vector<Count> counters(plan.counters(), 0);
  auto txs = db.transactions();
  const auto n = static_cast<std::int64_t>(txs.size());

#pragma omp parallel if (txs.size() >= kParallelCutoff)
  {
    std::vector<Count> local(plan.counters(), 0);
    CountingPlan::Scratch scratch;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) plan.count(txs[i].items, local, scratch);
#pragma omp critical(imsc_support_reduce)
    for (std::size_t c = 0; c < local.size(); ++c) counters[c] += local[c];
  }
  db.record_scan();
  return plan.expand(counters);
}

std::vector<Count> count_supports_serial(const TransactionDB& db, std::span<const Itemset> targets) {
  return SupportCounter(targets).count_serial(db);
}

std::vector<Count> count_supports(const TransactionDB& db, std::span<const Itemset> targets) {
  return SupportCounter(targets).count(db);
}

std::map<Itemset, Count> support_map(const TransactionDB& db, std::span<const Itemset> targets) {
  auto counts = count_supports(db, targets);
  std::map<Itemset, Count> out;
  for (std::size_t i = 0; i < targets.size(); ++i) out.emplace(targets[i], counts[i]);
  return out;
}

std::vector<Count> count_items_serial(const TransactionDB& db) {
  std::vector<Count> counts(db.item_bound(), 0);
  for (const auto& t : db.transactions()) {
    for (ItemId item : t.items) ++counts[item];
  }
  db.record_scan();
  return counts;
}

std::vector<Count> count_items(const TransactionDB& db) {
  std::vector<Count> counts(db.item_bound(), 0);
  auto txs = db.transactions();
  const auto n = static_cast<std::int64_t>(txs.size());

#pragma omp parallel if (txs.size() >= kParallelCutoff)
  {
    std::vector<Count> local(counts.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      for (ItemId item : txs[i].items) ++local[item];
    }
#pragma omp critical(imsc_items_reduce)
    for (std::size_t c = 0; c < local.size(); ++c) counts[c] += local[c];
  }
  db.record_scan();
  return counts;
}

}  // namespace imsc
