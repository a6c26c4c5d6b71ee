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

#include "imsc/io.hpp"

#include "imsc/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace imsc {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::uint64_t parse_count(std::string_view text, const std::string& source, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw MalformedLine(source, line_no, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

TransactionDB read_transactions(std::istream& in, ItemDictionary& dict, const std::string& source) {
  std::vector<Transaction> txs;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (skippable(line)) continue;
    auto tokens = split_ws(line);
    Transaction t;
    std::size_t first = 0;
    if (tokens.front().back() == ':') {
      if (tokens.front().size() == 1) throw MalformedLine(source, line_no, "empty transaction id");
      t.tid = tokens.front().substr(0, tokens.front().size() - 1);
      first = 1;
    }
    for (std::size_t i = first; i < tokens.size(); ++i) {
      if (tokens[i].back() == ':') {
        throw MalformedLine(source, line_no, "item token '" + tokens[i] + "' looks like a transaction id");
      }
    }
    t.items = canonical_itemset(std::span<const std::string>(tokens).subspan(first), dict);
    txs.push_back(std::move(t));
  }
  if (in.bad()) throw IoError("read error on " + source);
  return TransactionDB(std::move(txs));
}

void write_transactions(std::ostream& out, const TransactionDB& db, const ItemDictionary& dict) {
  for (std::size_t i = 0; i < db.cardinality(); ++i) {
    const auto& t = db[i];
    // A blank line would be skipped on read, so empty transactions always
    // carry a tid; the 1-based position stands in when none was given.
    if (t.tid || t.items.empty()) {
      out << (t.tid ? *t.tid : std::to_string(i + 1)) << ':';
      if (!t.items.empty()) out << ' ';
    }
    out << dict.format(t.items) << '\n';
  }
}

TransactionDB load_transactions(const std::filesystem::path& path, ItemDictionary& dict) {
  auto in = open_in(path);
  return read_transactions(in, dict, path.string());
}

void save_transactions(const TransactionDB& db, const ItemDictionary& dict, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_transactions(out, db, dict); });
}

FrequentSetStore read_fis(std::istream& in, ItemDictionary& dict, const std::string& source) {
  std::optional<int> version;
  std::optional<Count> cardinality;
  std::optional<Threshold> minsup;
  bool in_body = false;
  std::vector<std::pair<Itemset, Count>> body;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (line.front() == '!') {
      if (in_body) throw MalformedLine(source, line_no, "header line after body lines");
      auto fields = split_ws(std::string_view(line).substr(1));
      if (fields.size() != 2) throw MalformedLine(source, line_no, "header lines are '!key value'");
      if (fields[0] == "version") {
        auto v = parse_count(fields[1], source, line_no);
        if (v != kFisFormatVersion) {
          throw MalformedLine(source, line_no, "unsupported format version " + fields[1]);
        }
        version = static_cast<int>(v);
      } else if (fields[0] == "D") {
        cardinality = parse_count(fields[1], source, line_no);
      } else if (fields[0] == "minsup") {
        try {
          minsup = Threshold::parse(fields[1]);
        } catch (const UsageError& e) {
          throw MalformedLine(source, line_no, e.what());
        }
      } else {
        throw MalformedLine(source, line_no, "unknown header key '" + fields[0] + "'");
      }
      continue;
    }

    if (!version || !cardinality || !minsup) {
      throw MalformedLine(source, line_no, "body line before the !version, !D and !minsup headers");
    }
    in_body = true;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw MalformedLine(source, line_no, "expected '<count>\\t<items>'");
    Count count = parse_count(std::string_view(line).substr(0, tab), source, line_no);
    auto tokens = split_ws(std::string_view(line).substr(tab + 1));
    if (tokens.empty()) throw MalformedLine(source, line_no, "empty itemset");
    body.emplace_back(canonical_itemset(tokens, dict), count);
  }
  if (in.bad()) throw IoError("read error on " + source);
  if (!version || !cardinality || !minsup) {
    throw MalformedLine(source, line_no, "missing !version, !D or !minsup header");
  }

  FrequentSetStore store(*cardinality, *minsup);
  for (const auto& [itemset, count] : body) {
    if (store.contains(itemset)) {
      throw InvariantViolation("itemset {" + dict.format(itemset) + "} appears twice in " + source);
    }
    store.insert(itemset, count);
  }
  store.validate(&dict);
  return store;
}

void write_fis(std::ostream& out, const FrequentSetStore& store, const ItemDictionary& dict) {
  out << "!version " << kFisFormatVersion << '\n';
  out << "!D " << store.base_cardinality() << '\n';
  out << "!minsup " << to_string(store.base_threshold()) << '\n';

  struct Line {
    std::size_t size;
    std::vector<std::string> tokens;
    Count count;
  };
  std::vector<Line> lines;
  for (const auto& [itemset, count] : store.entries()) {
    Line l{itemset.size(), {}, count};
    for (auto t : dict.sorted_tokens(itemset)) l.tokens.emplace_back(t);
    lines.push_back(std::move(l));
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.tokens < b.tokens;
  });
  for (const auto& l : lines) {
    out << l.count << '\t';
    for (std::size_t i = 0; i < l.tokens.size(); ++i) out << (i ? " " : "") << l.tokens[i];
    out << '\n';
  }
}

FrequentSetStore load_fis(const std::filesystem::path& path, ItemDictionary& dict) {
  auto in = open_in(path);
  return read_fis(in, dict, path.string());
}

void save_fis(const FrequentSetStore& store, const ItemDictionary& dict, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_fis(out, store, dict); });
}

void write_rules(std::ostream& out, const std::vector<Rule>& rules, const ItemDictionary& dict) {
  for (const auto& r : rules) {
    out << r.support_count << '\t' << to_string(r.confidence) << '\t' << dict.format(r.antecedent) << " => "
        << dict.format(r.consequent) << '\n';
  }
}

void save_rules(const std::vector<Rule>& rules, const ItemDictionary& dict, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_rules(out, rules, dict); });
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  char millis[64];
  for (const auto& r : rows) {
    out << r.s_prime.numerator() << ',' << r.s_prime.denominator() << ',' << r.cpt.numerator() << ','
        << r.cpt.denominator() << ',' << to_string(r.scenario) << ',';
    std::snprintf(millis, sizeof millis, "%.3f,%.3f", r.imsc_millis, r.apriori_millis);
    out << millis << ',' << r.imsc_bd_passes << ',' << r.imsc_inc_passes << ',' << r.candidates_generated << ','
        << r.candidates_pruned << ',' << r.frequent_count << '\n';
  }
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_bench_csv(out, rows); });
}

}  // namespace imsc
