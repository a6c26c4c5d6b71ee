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

#include "imsc/bench.hpp"

#include "imsc/apriori.hpp"
#include "imsc/error.hpp"

#include <algorithm>
#include <chrono>

namespace imsc {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <class F>
double time_millis(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::vector<Threshold> parse_sweep(std::string_view text) {
  auto first = text.find(':');
  auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw UsageError("sweep must look like LO:HI:STEP, got '" + std::string(text) + "'");
  }
  Threshold lo = Threshold::parse(text.substr(0, first));
  Threshold hi = Threshold::parse(text.substr(first + 1, second - first - 1));
  Rational step = parse_rational(text.substr(second + 1));
  if (step <= Rational(0)) throw UsageError("sweep step must be positive");
  if (hi < lo) throw UsageError("sweep LO exceeds HI");

  std::vector<Threshold> out;
  for (Rational v = lo.value(); v <= hi.value(); v += step) out.emplace_back(v);
  return out;
}

std::vector<BenchRow> run_bench(const TransactionDB& big_db, const TransactionDB& inc_db, const Threshold& s,
                                const std::vector<Threshold>& sweep, const BenchOptions& options) {
  if (sweep.empty()) throw UsageError("empty sweep");
  if (!std::is_sorted(sweep.begin(), sweep.end())) throw UsageError("sweep must be ascending");
  const int repeats = std::max(1, options.repeats);

  const FrequentSetStore f = mine_apriori(big_db, s);
  const TransactionDB whole = concat(big_db, inc_db);
  MaintainOptions no_validation;
  no_validation.validate = false;

  std::vector<BenchRow> rows;
  rows.reserve(sweep.size());
  for (const Threshold& s_prime : sweep) {
    BenchRow row;
    row.s_prime = s_prime;

    std::vector<double> imsc_times;
    std::vector<double> apriori_times;
    MaintenanceResult maintained;
    FrequentSetStore remined;
    for (int r = 0; r < repeats; ++r) {
      imsc_times.push_back(time_millis([&] { maintained = maintain(f, big_db, inc_db, s_prime, no_validation); }));
      apriori_times.push_back(time_millis([&] { remined = mine_apriori(whole, s_prime); }));
    }
    if (!(maintained.store == remined)) {
      throw Error("maintained store differs from the Apriori re-mine at s' = " + to_string(s_prime));
    }

    row.cpt = maintained.plan.cpt;
    row.scenario = maintained.plan.scenario;
    row.imsc_millis = median(imsc_times);
    row.apriori_millis = median(apriori_times);
    row.imsc_bd_passes = maintained.stats.big_db_passes;
    row.imsc_inc_passes = maintained.stats.inc_db_passes;
    row.candidates_generated = maintained.stats.candidates_generated;
    row.candidates_pruned = maintained.stats.candidates_pruned;
    row.frequent_count = maintained.store.size();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace imsc
