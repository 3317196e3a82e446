// Copyright 2026 The greenbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.h"
#include "cli/commands.h"
#include "cli/files.h"
#include "cli/generator.h"
#include "greenbp/errors.h"
#include "greenbp/oracle.h"
#include "json.hpp"

namespace greenbp::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

Rational q(const char* text) { return parse_rational(text); }

InstanceFile parse(const char* text) { return parse_instance(json::parse(text)); }

// Fresh scratch directory per test.
fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path dir = fs::temp_directory_path() /
                 ("greenbp_cli_" + std::string(info->test_suite_name()) + "_" +
                  info->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseInstance, ZeroBetaInstanceIsPlainBinPacking) {
  InstanceFile file = parse(R"({"beta":"0","G":"1","sizes":["0.5","0.5"]})");
  EXPECT_EQ(file.instance.item_count(), 2u);
  EXPECT_EQ(file.instance.beta(), 0);
  EXPECT_EQ(file.instance.singleton_energy(), 0);
}

TEST(ParseInstance, BudgetBelowSingletonEnergyIsInfeasible) {
  EXPECT_THROW(parse(R"({"beta":"1","G":"0.5","U":"0","sizes":["0.9"]})"),
               InfeasibleBudget);
}

TEST(ParseInstance, OversizedItemNamesItsPosition) {
  try {
    parse(R"({"beta":"1","G":"0.5","sizes":["0.5","1.5"]})");
    FAIL() << "expected a range error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("sizes[1]"), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, RejectsBadFields) {
  EXPECT_THROW(parse(R"({"beta":"-1","G":"0.5","sizes":["0.5"]})"), ParseError);
  EXPECT_THROW(parse(R"({"beta":"1","G":"1.5","sizes":["0.5"]})"), ParseError);
  EXPECT_THROW(parse(R"({"beta":"1","G":"0.5","sizes":["0"]})"), ParseError);
  EXPECT_THROW(parse(R"({"beta":"1","G":"0.5","sizes":[0.5]})"), ParseError);
  EXPECT_THROW(parse(R"({"beta":"1","G":"0.5","sizes":["x"]})"), ParseError);
  EXPECT_THROW(parse(R"({"G":"0.5","sizes":["0.5"]})"), ParseError);
  EXPECT_THROW(parse(R"({"beta":"1","G":"0.5","sizes":[]})"), ParseError);
}

TEST(ParseInstance, EmptyInstanceMustBeMarked) {
  InstanceFile file = parse(R"({"beta":"1","G":"0.5","sizes":[],"empty":true})");
  EXPECT_TRUE(file.instance.empty());
  EXPECT_THROW(parse(R"({"beta":"1","G":"0.5","sizes":["0.1"],"empty":true})"),
               ParseError);
}

TEST(ParseInstance, AcceptsFractionsAndIntegers) {
  InstanceFile file = parse(R"({"beta":2,"G":"1/3","sizes":["1/3","0.25",1]})");
  EXPECT_EQ(file.instance.green(), q("1/3"));
  EXPECT_EQ(file.instance.total_size(), q("19/12"));
}

TEST(InstanceFile, RoundTripPreservesValuesAndOrder) {
  InstanceFile file = parse(
      R"({"name":"x","beta":"3/7","G":"0.4","U":"5","sizes":["0.2","1/3","0.9"]})");
  fs::path path = scratch_dir() / "x.json";
  write_instance(path, file);
  InstanceFile back = read_instance(path);
  EXPECT_EQ(back.name, "x");
  EXPECT_EQ(back.instance.beta(), q("3/7"));
  EXPECT_EQ(back.instance.budget(), q("5"));
  EXPECT_EQ(instance_to_json(back), instance_to_json(file));
  EXPECT_EQ(instance_hash(back), instance_hash(file));
  EXPECT_EQ(back.instance.original_indices(), file.instance.original_indices());
}

TEST(InstanceFile, HashChangesWithContent) {
  InstanceFile a = parse(R"({"beta":"1","G":"0.5","sizes":["0.2"]})");
  InstanceFile b = parse(R"({"beta":"1","G":"0.5","sizes":["0.3"]})");
  InstanceFile c = parse(R"({"beta":"1","G":"1/2","sizes":["1/5"]})");
  EXPECT_NE(instance_hash(a), instance_hash(b));
  EXPECT_EQ(instance_hash(a), instance_hash(c));
  EXPECT_EQ(instance_hash(a).size(), 64u);
}

TEST(SolutionFile, RoundTrip) {
  InstanceFile file = parse(R"({"beta":"1","G":"0.5","sizes":["0.7","0.2","0.6"]})");
  SolveParams params;
  params.algo = Algorithm::kAptas;
  params.epsilon = q("1/2");
  SolutionFile solution = solve(file, params);
  fs::path path = scratch_dir() / "s.json";
  write_solution(path, solution);
  SolutionFile back = read_solution(path);
  EXPECT_EQ(back.bins, solution.bins);
  EXPECT_EQ(back.stats, solution.stats);
  EXPECT_EQ(back.params, solution.params);
  EXPECT_EQ(back.instance_hash, solution.instance_hash);
  EXPECT_EQ(solution_to_json(back), solution_to_json(solution));
}

TEST(Generator, EmptyInstance) {
  GenerateOptions options;
  options.n = 0;
  InstanceFile file = generate(options);
  EXPECT_TRUE(file.instance.empty());
  EXPECT_EQ(parse_instance(instance_to_json(file)).instance.item_count(), 0u);
}

TEST(Generator, SameSeedSameBytes) {
  fs::path dir = scratch_dir();
  for (const char* dist : {"uniform:0.05:0.7", "grid:12"}) {
    RunResult a = run_cli({"gen", "--n", "20", "--seed", "9", "--dist", dist});
    RunResult b = run_cli({"gen", "--n", "20", "--seed", "9", "--dist", dist});
    RunResult c = run_cli({"gen", "--n", "20", "--seed", "10", "--dist", dist});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
  }
  ASSERT_EQ(run_cli({"gen", "--count", "4", "--out", (dir / "a").string()}).code, 0);
  ASSERT_EQ(run_cli({"gen", "--count", "4", "--out", (dir / "b").string()}).code, 0);
  auto files = list_corpus(dir / "a");
  ASSERT_EQ(files.size(), 4u);
  for (const auto& f : files) {
    EXPECT_EQ(read_text(f), read_text(dir / "b" / f.filename()));
  }
}

TEST(Generator, SizesRespectTheDistribution) {
  GenerateOptions options;
  options.n = 200;
  options.dist = parse_distribution("uniform:0.1:0.3");
  InstanceFile uniform = generate(options);
  for (const Rational& s : uniform.instance.sizes()) {
    EXPECT_GE(s, q("0.1"));
    EXPECT_LE(s, q("0.3"));
    EXPECT_EQ(Integer(10000 % s.get_den()), 0);
  }
  options.dist = parse_distribution("grid:5");
  InstanceFile grid = generate(options);
  for (const Rational& s : grid.instance.sizes()) {
    EXPECT_LE(s.get_den(), 5);
  }
}

TEST(Generator, BudgetModes) {
  GenerateOptions options;
  options.n = 8;
  options.green = q("0.2");
  options.budget = parse_budget_mode("tight");
  InstanceFile tight = generate(options);
  EXPECT_EQ(tight.instance.budget(), tight.instance.singleton_energy());
  EXPECT_NO_THROW(parse_instance(instance_to_json(tight)));
  options.budget = parse_budget_mode("slack:3/2");
  InstanceFile slack = generate(options);
  EXPECT_EQ(*slack.instance.budget(), slack.instance.singleton_energy() * q("3/2"));
}

TEST(Generator, RejectsBadParameters) {
  EXPECT_THROW(parse_distribution("uniform:0:0.5"), ContractViolation);
  EXPECT_THROW(parse_distribution("uniform:0.6:0.5"), ContractViolation);
  EXPECT_THROW(parse_distribution("uniform:0.00001:0.00002"), ContractViolation);
  EXPECT_THROW(parse_distribution("grid:0"), ContractViolation);
  EXPECT_THROW(parse_distribution("normal:1"), ContractViolation);
  EXPECT_THROW(parse_budget_mode("slack:1/2"), ContractViolation);
  EXPECT_THROW(parse_budget_mode("loose"), ContractViolation);
}

TEST(Generator, UniformIntStaysInRange) {
  std::mt19937_64 rng(4);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 1000; ++i) ++seen[uniform_int(rng, 3, 7) - 3];
  for (int count : seen) EXPECT_GT(count, 100);
}

TEST(Verify, EverySolverPassesOnGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenerateOptions options;
    options.n = 1 + seed % 7;
    options.seed = seed;
    options.green = Rational(seed % 5, 8);
    options.dist = parse_distribution(seed % 2 ? "uniform:0.01:1" : "grid:9");
    options.budget = parse_budget_mode("slack:5/4");
    InstanceFile file = generate(options);
    for (Algorithm algo : all_algorithms()) {
      for (Problem problem : {Problem::kGbp, Problem::kCgbp}) {
        SolveParams params;
        params.algo = algo;
        params.problem = problem;
        params.tau = (1 - file.instance.green()) / 2;
        SolutionFile solution = solve(file, params);
        VerifyReport report = verify(file, solution);
        if (problem == Problem::kCgbp && algo != Algorithm::kExact &&
            algo != Algorithm::kAptas && algo != Algorithm::kApprox32) {
          continue;  // heuristics may overspend U
        }
        EXPECT_TRUE(report.ok()) << "seed " << seed << " " << to_string(algo)
                                 << ": " << report.violations.front();
      }
    }
  }
}

TEST(Verify, ExactSolutionStatsMatchTheOracle) {
  InstanceFile file =
      parse(R"({"beta":"2","G":"0.3","sizes":["0.5","0.4","0.35","0.2","0.1"]})");
  SolveParams params;
  params.algo = Algorithm::kExact;
  SolutionFile solution = solve(file, params);
  EXPECT_TRUE(verify(file, solution).ok());
  EXPECT_EQ(solution.stats, solve_exact_gbp(file.instance).stats);
}

TEST(Verify, AptasWithinItsBoundOfExact) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenerateOptions options;
    options.n = 7;
    options.seed = seed;
    options.green = Rational(seed, 10);
    InstanceFile file = generate(options);
    SolveParams params;
    params.algo = Algorithm::kExact;
    SolutionFile exact = solve(file, params);
    params.algo = Algorithm::kAptas;
    SolutionFile aptas = solve(file, params);
    EXPECT_LE(aptas.stats.bins_used, 2 * exact.stats.bins_used + 1);
    EXPECT_LE(aptas.stats.energy, exact.stats.energy);
  }
}

TEST(Verify, FfdOnZeroBetaCostsItsBins) {
  InstanceFile file =
      parse(R"({"beta":"0","G":"0.2","sizes":["0.5","0.7","0.3","0.2","0.6"]})");
  SolveParams params;
  params.algo = Algorithm::kFfd;
  SolutionFile solution = solve(file, params);
  EXPECT_EQ(solution.stats.objective, Rational(solution.stats.bins_used));
}

TEST(Verify, DuplicatedItemIsCoveredTwice) {
  InstanceFile file = parse(R"({"beta":"1","G":"0.5","sizes":["0.3","0.4"]})");
  SolutionFile solution = solve(file, SolveParams{});
  solution.bins = {{0, 1}, {1}};
  VerifyReport report = verify(file, solution);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front(), "item 1 covered twice");
}

TEST(Verify, ReportsMissingItemsOverfullBinsAndStatMismatch) {
  InstanceFile file = parse(R"({"beta":"1","G":"0.5","sizes":["0.6","0.7"]})");
  SolutionFile solution = solve(file, SolveParams{});
  SolutionFile missing = solution;
  missing.bins = {{0}};
  EXPECT_EQ(verify(file, missing).violations,
            std::vector<std::string>{"item 1 not packed"});
  SolutionFile overfull = solution;
  overfull.bins = {{0, 1}};
  overfull.stats.bins_used = 1;
  ASSERT_FALSE(verify(file, overfull).ok());
  EXPECT_NE(verify(file, overfull).violations.front().find("exceeds capacity"),
            std::string::npos);
  SolutionFile wrong = solution;
  wrong.stats.energy += 1;
  wrong.stats.light_bins += 1;
  EXPECT_EQ(verify(file, wrong).violations.size(), 2u);
  SolutionFile out_of_range = solution;
  out_of_range.bins = {{0}, {1, 2}};
  EXPECT_FALSE(verify(file, out_of_range).ok());
}

TEST(Verify, HashMismatch) {
  InstanceFile file = parse(R"({"beta":"1","G":"0.5","sizes":["0.6","0.7"]})");
  SolutionFile solution = solve(file, SolveParams{});
  InstanceFile other = parse(R"({"beta":"2","G":"0.5","sizes":["0.6","0.7"]})");
  VerifyReport report = verify(other, solution);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.violations.front().find("hash mismatch"), std::string::npos);
}

TEST(Verify, CgbpEnergyOverBudgetIsABudgetViolation) {
  InstanceFile file =
      parse(R"({"beta":"1","G":"0.5","U":"0.1","sizes":["0.3","0.3","0.3"]})");
  SolveParams params;
  params.problem = Problem::kCgbp;
  SolutionFile solution = solve(file, params);  // ffd ignores U
  ASSERT_EQ(solution.stats.energy, q("0.4"));
  VerifyReport report = verify(file, solution);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations.front().find("budget violation"), std::string::npos);
  params.algo = Algorithm::kExact;
  EXPECT_TRUE(verify(file, solve(file, params)).ok());
}

TEST(Bench, RowsPerInstanceAndAlgorithm) {
  fs::path dir = scratch_dir();
  ASSERT_EQ(run_cli({"gen", "--count", "3", "--n", "6", "--out", dir.string()}).code,
            0);
  BenchOptions options;
  options.algos = {Algorithm::kExact, Algorithm::kFfd};
  BenchReport report = bench(list_corpus(dir), options);
  ASSERT_EQ(report.rows.size(), 6u);
  EXPECT_TRUE(report.skipped.empty());
  for (std::size_t r = 0; r < report.rows.size(); r += 2) {
    const BenchRow& exact = report.rows[r];
    const BenchRow& ffd = report.rows[r + 1];
    EXPECT_EQ(exact.algo, "exact");
    EXPECT_EQ(ffd.instance, exact.instance);
    EXPECT_EQ(*exact.ratio_vs_exact, 1);
    EXPECT_EQ(*ffd.ratio_vs_exact, ffd.objective / exact.objective);
  }
  std::ostringstream csv;
  write_csv(csv, report.rows);
  std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
}

TEST(Bench, WithoutExactThereIsNoRatio) {
  fs::path dir = scratch_dir();
  ASSERT_EQ(run_cli({"gen", "--count", "2", "--out", dir.string()}).code, 0);
  BenchOptions options;
  options.algos = {Algorithm::kNextFit};
  for (const BenchRow& row : bench(list_corpus(dir), options).rows) {
    EXPECT_FALSE(row.ratio_vs_exact.has_value());
  }
}

TEST(Bench, EmptyCorpusIsHeaderOnlyAndNonzero) {
  fs::path dir = scratch_dir();
  RunResult result = run_cli({"bench", dir.string()});
  EXPECT_EQ(result.code, kExitInputError);
  EXPECT_EQ(std::count(result.out.begin(), result.out.end(), '\n'), 1);
  EXPECT_NE(result.err.find("nothing to do"), std::string::npos);
}

TEST(Bench, UnreadableEntriesAreSkipped) {
  fs::path dir = scratch_dir();
  ASSERT_EQ(run_cli({"gen", "--count", "2", "--out", dir.string()}).code, 0);
  write_text(dir / "broken.json", "{not json");
  RunResult result = run_cli({"bench", dir.string(), "--algos", "ffd"});
  EXPECT_EQ(result.code, kExitInputError);
  EXPECT_EQ(std::count(result.out.begin(), result.out.end(), '\n'), 3);
  EXPECT_NE(result.err.find("broken.json"), std::string::npos);
}

TEST(Run, ExitCodes) {
  fs::path dir = scratch_dir();
  std::string instance = (dir / "i.json").string();
  std::string solution = (dir / "s.json").string();
  write_text(instance, R"({"beta":"1","G":"0.5","U":"0","sizes":["0.9"]})");
  EXPECT_EQ(run_cli({"solve", instance}).code, kExitInfeasible);

  write_text(instance,
             R"({"beta":"1","G":"0.5","sizes":["0.3","0.3","0.3","0.3","0.3","0.3"]})");
  EXPECT_EQ(run_cli({"solve", instance, "--algo", "exact", "--node-budget", "1"}).code,
            kExitBudgetExhausted);
  EXPECT_EQ(run_cli({"solve", instance, "--algo", "exact", "--out", solution}).code,
            kExitOk);
  RunResult ok = run_cli({"verify", instance, solution});
  EXPECT_EQ(ok.code, kExitOk) << ok.out;

  json doc = json::parse(read_text(solution));
  doc["bins"][0].push_back(doc["bins"][1][0]);
  write_text(solution, doc.dump());
  RunResult bad = run_cli({"verify", instance, solution});
  EXPECT_EQ(bad.code, kExitVerifyFailed);
  EXPECT_NE(bad.out.find("covered twice"), std::string::npos);

  EXPECT_EQ(run_cli({"solve", instance, "--algo", "nope"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"solve", instance, "--bogus"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"solve", (dir / "missing.json").string()}).code, kExitInputError);
  EXPECT_EQ(run_cli({"solve", instance, "--algo", "aptas", "--epsilon", "0.3"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"solve", instance, "--problem", "cgbp"}).code, kExitInputError);
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace greenbp::cli
