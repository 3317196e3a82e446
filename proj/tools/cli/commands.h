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

#ifndef GREENBP_TOOLS_CLI_COMMANDS_H_
#define GREENBP_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cli/files.h"
#include "greenbp/model.h"
#include "greenbp/rational.h"

namespace greenbp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInfeasible = 2,
  kExitBudgetExhausted = 3,
  kExitInputError = 4,
};

enum class Algorithm { kExact, kAptas, kApprox32, kNextFit, kFirstFit, kFfd, kTnf };

// "exact", "aptas", "approx32", "nf", "ff", "ffd", "tnf".
Algorithm parse_algorithm(std::string_view text);
std::string to_string(Algorithm algo);
const std::vector<Algorithm>& all_algorithms();

struct SolveParams {
  Algorithm algo = Algorithm::kFfd;
  Problem problem = Problem::kGbp;
  Rational epsilon = 1;  // aptas
  Rational tau = 0;      // tnf
  // Oracle search nodes (exact) or configuration search nodes (aptas,
  // approx32); 0 keeps the library default.
  std::uint64_t node_budget = 0;
  std::uint64_t seed = 0;
  bool original_order = false;  // nf, ff
};

// Runs the algorithm and packages the result. Throws ContractViolation for
// invalid parameters, InfeasibleBudget, and SearchBudgetExceeded.
SolutionFile solve(const InstanceFile& file, const SolveParams& params);

struct VerifyReport {
  std::vector<std::string> violations;
  PackingStats recomputed;
  bool ok() const { return violations.empty(); }
};

// Checks the hash, that every item is packed exactly once, bin capacities,
// the reported statistics (class counts use params.epsilon, default 1) and,
// for CGBP solutions, energy <= U.
VerifyReport verify(const InstanceFile& file, const SolutionFile& solution);

struct BenchOptions {
  std::vector<Algorithm> algos;
  SolveParams params;  // algo is replaced per column
};

struct BenchRow {
  std::string instance;
  std::string algo;
  std::string params;
  bool solved = false;
  bool budget_exhausted = false;
  std::size_t bins = 0;
  Rational energy = 0;
  Rational objective = 0;  // problem objective
  double wall_ms = 0;
  std::optional<Rational> ratio_vs_exact;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> skipped;  // one message per unusable entry
};

// Instance files (*.json) directly inside `corpus`, by file name.
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& corpus);

BenchReport bench(const std::vector<std::filesystem::path>& files,
                  const BenchOptions& options);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace greenbp::cli

#endif  // GREENBP_TOOLS_CLI_COMMANDS_H_
