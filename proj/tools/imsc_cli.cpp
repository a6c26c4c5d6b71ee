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

// imsc command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 data or invariant error.

#include "imsc/apriori.hpp"
#include "imsc/bench.hpp"
#include "imsc/datagen.hpp"
#include "imsc/error.hpp"
#include "imsc/io.hpp"
#include "imsc/maintain.hpp"
#include "imsc/rules.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <string>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string format_sets(const std::set<imsc::Itemset>& sets, const imsc::ItemDictionary& dict) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += ", ";
    out += "{" + dict.format(s) + "}";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequent itemset mining and incremental maintenance under support threshold change"};
  app.require_subcommand(1);

  std::string db_path, inc_path, fis_path, out_path, csv_path;
  std::string minsup, minconf, minsup_old, sweep;
  bool report = false;
  bool no_validate = false;
  int repeats = 3;
  imsc::GenParams gen;

  auto* mine = app.add_subcommand("mine", "Mine frequent itemsets with Apriori");
  mine->add_option("--db", db_path, "Transaction file")->required();
  mine->add_option("--minsup", minsup, "Minimum support (30%, 0.30 or 3/10)")->required();
  mine->add_option("--out", out_path, "Output .fis file")->required();

  auto* maintain = app.add_subcommand("maintain", "Maintain a store after appending an increment");
  maintain->add_option("--db", db_path, "Base transaction file the store was mined from")->required();
  maintain->add_option("--inc", inc_path, "Increment transaction file")->required();
  maintain->add_option("--fis", fis_path, "Store mined from --db")->required();
  maintain->add_option("--minsup", minsup, "New minimum support")->required();
  maintain->add_option("--out", out_path, "Output .fis file")->required();
  maintain->add_flag("--report", report, "Print the plan and winner/persistent/loser sets");
  maintain->add_flag("--no-validate", no_validate, "Skip the sampled store consistency check");

  auto* rules = app.add_subcommand("rules", "Generate association rules from a store");
  rules->add_option("--fis", fis_path, "Input .fis file")->required();
  rules->add_option("--minconf", minconf, "Minimum confidence")->required();
  rules->add_option("--out", out_path, "Output rules file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic transaction database");
  gen_cmd->add_option("--transactions", gen.n_transactions, "Number of transactions")->required();
  gen_cmd->add_option("--avg-len", gen.avg_tx_len, "Average transaction length")->required();
  gen_cmd->add_option("--avg-pattern-len", gen.avg_pattern_len, "Average pattern length")->required();
  gen_cmd->add_option("--patterns", gen.n_patterns, "Number of patterns")->capture_default_str();
  gen_cmd->add_option("--items", gen.n_items, "Number of distinct items")->capture_default_str();
  gen_cmd->add_option("--corruption", gen.corruption_mean, "Mean corruption level")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", out_path, "Output transaction file")->required();

  auto* bench = app.add_subcommand("bench", "Sweep the maintenance threshold against Apriori");
  bench->add_option("--db", db_path, "Base transaction file")->required();
  bench->add_option("--inc", inc_path, "Increment transaction file")->required();
  bench->add_option("--minsup-old", minsup_old, "Threshold the base store is mined at")->required();
  bench->add_option("--sweep", sweep, "LO:HI:STEP, e.g. 5%:60%:5%")->required();
  bench->add_option("--csv", csv_path, "Output CSV")->required();
  bench->add_option("--repeat", repeats, "Timing repeats per point (median reported)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    imsc::ItemDictionary dict;

    if (mine->parsed()) {
      auto s = imsc::Threshold::parse(minsup);
      auto db = imsc::load_transactions(db_path, dict);
      auto store = imsc::mine_apriori(db, s);
      imsc::save_fis(store, dict, out_path);
      std::cout << store.size() << " frequent itemsets\n";
    } else if (maintain->parsed()) {
      auto s_prime = imsc::Threshold::parse(minsup);
      auto big = imsc::load_transactions(db_path, dict);
      auto inc = imsc::load_transactions(inc_path, dict);
      auto f = imsc::load_fis(fis_path, dict);
      imsc::MaintainOptions options;
      options.validate = !no_validate;
      auto result = imsc::maintain(f, big, inc, s_prime, options);
      imsc::save_fis(result.store, dict, out_path);
      if (report) {
        auto cls = imsc::classify_itemsets(f, result.store);
        std::cout << "scenario=" << imsc::to_string(result.plan.scenario) << '\n'
                  << "cpt=" << imsc::to_string(result.plan.cpt) << '\n'
                  << "min_supp=" << imsc::to_string(result.plan.min_supp) << '\n'
                  << "D=" << result.plan.big_d << '\n'
                  << "d=" << result.plan.little_d << '\n'
                  << "winners=" << format_sets(cls.winners, dict) << '\n'
                  << "persistents=" << format_sets(cls.persistents, dict) << '\n'
                  << "losers=" << format_sets(cls.losers, dict) << '\n'
                  << "bd_passes=" << result.stats.big_db_passes << '\n'
                  << "inc_passes=" << result.stats.inc_db_passes << '\n';
      }
      std::cout << result.store.size() << " frequent itemsets\n";
    } else if (rules->parsed()) {
      auto c = imsc::Threshold::parse(minconf);
      auto f = imsc::load_fis(fis_path, dict);
      auto generated = imsc::generate_rules(f, c);
      imsc::save_rules(generated, dict, out_path);
      std::cout << generated.size() << " rules\n";
    } else if (gen_cmd->parsed()) {
      if (gen.avg_pattern_len > gen.avg_tx_len) {
        std::cerr << "warning: average pattern length exceeds average transaction length\n";
      }
      auto db = imsc::generate_db(gen, dict);
      imsc::save_transactions(db, dict, out_path);
      std::cout << db.cardinality() << " transactions\n";
    } else if (bench->parsed()) {
      auto s = imsc::Threshold::parse(minsup_old);
      auto points = imsc::parse_sweep(sweep);
      auto big = imsc::load_transactions(db_path, dict);
      auto inc = imsc::load_transactions(inc_path, dict);
      auto rows = imsc::run_bench(big, inc, s, points, imsc::BenchOptions{repeats});
      imsc::write_bench_csv(rows, csv_path);
      std::cout << rows.size() << " sweep points\n";
    }
  } catch (const imsc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const imsc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
