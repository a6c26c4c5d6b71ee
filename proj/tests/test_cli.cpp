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

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const fs::path kData = IMSC_TEST_DATA_DIR;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("\"") + IMSC_CLI_PATH + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("imsc_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path operator/(const std::string& name) const { return path / name; }
};

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("mine writes the golden store") {
  TempDir tmp;
  auto r = run("mine --db " + q(kData / "bd10.txt") + " --minsup 30% --out " + q(tmp / "f.fis"));
  REQUIRE(r.status == 0);
  CHECK(slurp(tmp / "f.fis") == slurp(kData / "f30.fis"));
}

TEST_CASE("maintain --report on the mixed golden case") {
  TempDir tmp;
  auto r = run("maintain --db " + q(kData / "bd10.txt") + " --inc " + q(kData / "inc1.txt") + " --fis " +
               q(kData / "f30.fis") + " --minsup 35% --out " + q(tmp / "g.fis") + " --report");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("scenario=mixed\n") != std::string::npos);
  CHECK(r.out.find("cpt=51/20\n") != std::string::npos);
  CHECK(r.out.find("winners={B D}\n") != std::string::npos);
  CHECK(r.out.find("losers={A B C}, {A C}, {C D}\n") != std::string::npos);
  CHECK(r.out.find("bd_passes=1\ninc_passes=3\n") != std::string::npos);
}

TEST_CASE("maintain equals mining the concatenation") {
  TempDir tmp;
  {
    std::ofstream all(tmp / "all.txt");
    all << slurp(kData / "bd10.txt") << slurp(kData / "inc23.txt");
  }
  for (const char* minsup : {"30%", "40%", "20%"}) {
    CAPTURE(minsup);
    REQUIRE(run("maintain --db " + q(kData / "bd10.txt") + " --inc " + q(kData / "inc23.txt") + " --fis " +
                q(kData / "f30.fis") + " --minsup " + minsup + " --out " + q(tmp / "g.fis"))
                .status == 0);
    REQUIRE(run("mine --db " + q(tmp / "all.txt") + " --minsup " + minsup + " --out " + q(tmp / "h.fis")).status == 0);
    CHECK(slurp(tmp / "g.fis") == slurp(tmp / "h.fis"));
  }
}

TEST_CASE("rules subcommand") {
  TempDir tmp;
  REQUIRE(run("rules --fis " + q(kData / "f30.fis") + " --minconf 70% --out " + q(tmp / "r.txt")).status == 0);
  auto text = slurp(tmp / "r.txt");
  CHECK(text.find("3\t3/4\tD => C\n") != std::string::npos);
}

TEST_CASE("gen is deterministic and bench writes one row per sweep point") {
  TempDir tmp;
  auto gen = [&](const std::string& name, int n, int seed) {
    return run("gen --transactions " + std::to_string(n) + " --avg-len 5 --avg-pattern-len 2 --patterns 50 --items 40" +
               " --seed " + std::to_string(seed) + " --out " + q(tmp / name));
  };
  REQUIRE(gen("a.txt", 300, 5).status == 0);
  REQUIRE(gen("b.txt", 300, 5).status == 0);
  REQUIRE(gen("c.txt", 100, 6).status == 0);
  CHECK(slurp(tmp / "a.txt") == slurp(tmp / "b.txt"));
  auto r = run("bench --db " + q(tmp / "a.txt") + " --inc " + q(tmp / "c.txt") +
               " --minsup-old 10% --sweep 5%:60%:5% --repeat 1 --csv " + q(tmp / "b.csv"));
  REQUIRE(r.status == 0);
  CHECK(count_lines(slurp(tmp / "b.csv")) == 13);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  CHECK(run("").status == 1);
  CHECK(run("--help").status == 0);
  CHECK(run("mine --db x").status == 1);
  CHECK(run("mine --db " + q(kData / "bd10.txt") + " --minsup 130% --out " + q(tmp / "f.fis")).status == 1);
  CHECK(run("mine --db " + q(tmp / "missing.txt") + " --minsup 30% --out " + q(tmp / "f.fis")).status == 2);
  {
    std::ofstream bad(tmp / "bad.fis");
    bad << "!version 1\n!D 10\n!minsup 3/10\n2\tA\n";
  }
  CHECK(run("rules --fis " + q(tmp / "bad.fis") + " --minconf 50% --out " + q(tmp / "r.txt")).status == 2);
}
