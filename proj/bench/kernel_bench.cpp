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

// Parallel counting kernels against their serial references on synthetic
// T5.I2 data.

#include "imsc/apriori.hpp"
#include "imsc/datagen.hpp"
#include "imsc/support.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

struct Data {
  imsc::ItemDictionary dict;
  imsc::TransactionDB db;
  std::vector<imsc::Itemset> pairs;
  std::vector<imsc::Itemset> triples;
};

const Data& data() {
  static Data d = [] {
    Data out;
    imsc::GenParams p;
    p.n_transactions = 50000;
    p.avg_tx_len = 5;
    p.avg_pattern_len = 2;
    p.seed = 11;
    out.db = imsc::generate_db(p, out.dict);
    auto f = imsc::mine_apriori(out.db, imsc::Threshold(5, 1000));
    out.pairs = imsc::apriori_gen(f.level(1)).itemsets();
    out.triples = imsc::apriori_gen(f.level(2)).itemsets();
    return out;
  }();
  return d;
}

void BM_CountItems(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(imsc::count_items(data().db));
}
void BM_CountItemsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(imsc::count_items_serial(data().db));
}
void BM_CountPairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(imsc::count_supports(data().db, data().pairs));
}
void BM_CountPairsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(imsc::count_supports_serial(data().db, data().pairs));
}
void BM_CountTriples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(imsc::count_supports(data().db, data().triples));
}
void BM_CountTriplesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(imsc::count_supports_serial(data().db, data().triples));
}

}  // namespace

BENCHMARK(BM_CountItems)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountItemsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPairs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPairsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTriples)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTriplesSerial)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  data();  // build the shared data set outside any timed region
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
