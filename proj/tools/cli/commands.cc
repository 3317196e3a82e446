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

#include "cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

#include "greenbp/approx32.h"
#include "greenbp/aptas.h"
#include "greenbp/baselines.h"
#include "greenbp/errors.h"
#include "greenbp/oracle.h"

namespace greenbp::cli {
namespace {

const std::vector<std::pair<Algorithm, std::string_view>>& algorithm_names() {
  static const std::vector<std::pair<Algorithm, std::string_view>> kNames = {
      {Algorithm::kExact, "exact"},   {Algorithm::kAptas, "aptas"},
      {Algorithm::kApprox32, "approx32"}, {Algorithm::kNextFit, "nf"},
      {Algorithm::kFirstFit, "ff"},   {Algorithm::kFfd, "ffd"},
      {Algorithm::kTnf, "tnf"},
  };
  return kNames;
}

std::map<std::string, std::string> param_map(const SolveParams& params) {
  std::map<std::string, std::string> out;
  out["problem"] = to_string(params.problem);
  out["seed"] = std::to_string(params.seed);
  switch (params.algo) {
    case Algorithm::kAptas:
      out["epsilon"] = to_exact_string(params.epsilon);
      [[fallthrough]];
    case Algorithm::kExact:
    case Algorithm::kApprox32:
      if (params.node_budget != 0) {
        out["node_budget"] = std::to_string(params.node_budget);
      }
      break;
    case Algorithm::kNextFit:
    case Algorithm::kFirstFit:
      out["order"] = params.original_order ? "original" : "canonical";
      break;
    case Algorithm::kTnf:
      out["tau"] = to_exact_string(params.tau);
      break;
    case Algorithm::kFfd:
      break;
  }
  return out;
}

std::string joined_params(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + "=" + value;
  }
  return out;
}

Packing run_algorithm(const Instance& inst, const SolveParams& params) {
  ItemOrder order = params.original_order ? ItemOrder::kOriginal
                                          : ItemOrder::kCanonical;
  AptasOptions aptas;
  if (params.node_budget != 0) aptas.configuration_budget = params.node_budget;
  switch (params.algo) {
    case Algorithm::kExact: {
      OracleOptions options;
      if (params.node_budget != 0) options.node_budget = params.node_budget;
      return params.problem == Problem::kGbp
                 ? solve_exact_gbp(inst, options).packing
                 : solve_exact_cgbp(inst, options).packing;
    }
    case Algorithm::kAptas:
      return aptas_solve(inst, params.epsilon, params.problem, aptas);
    case Algorithm::kApprox32:
      return approx32_solve(inst, params.problem, Approx32Options{aptas});
    case Algorithm::kNextFit:
      return next_fit(inst, order);
    case Algorithm::kFirstFit:
      return first_fit(inst, order);
    case Algorithm::kFfd:
      return ffd(inst);
    case Algorithm::kTnf:
      return threshold_next_fit(inst, params.tau);
  }
  throw ContractViolation("unknown algorithm");
}

Rational stats_epsilon(const SolutionFile& solution,
                       std::vector<std::string>& violations) {
  auto it = solution.params.find("epsilon");
  if (it == solution.params.end()) return 1;
  try {
    Rational eps = parse_rational(it->second);
    require_valid_epsilon(eps);
    return eps;
  } catch (const ContractViolation& e) {
    violations.push_back(std::string("params.epsilon: ") + e.what() +
                         "; class counts checked with epsilon = 1");
    return 1;
  }
}

}  // namespace

Algorithm parse_algorithm(std::string_view text) {
  for (const auto& [algo, name] : algorithm_names()) {
    if (name == text) return algo;
  }
  throw ContractViolation("unknown algorithm \"" + std::string(text) + "\"");
}

std::string to_string(Algorithm algo) {
  for (const auto& [a, name] : algorithm_names()) {
    if (a == algo) return std::string(name);
  }
  return "unknown";
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> kAll = [] {
    std::vector<Algorithm> all;
    for (const auto& entry : algorithm_names()) all.push_back(entry.first);
    return all;
  }();
  return kAll;
}

SolutionFile solve(const InstanceFile& file, const SolveParams& params) {
  const Instance& inst = file.instance;
  if (params.algo == Algorithm::kAptas) require_valid_epsilon(params.epsilon);
  if (params.problem == Problem::kCgbp && !inst.budget()) {
    throw ContractViolation("cgbp needs an instance with a budget U");
  }
  Packing packing = canonical_form(run_algorithm(inst, params));
  check_feasible(inst, packing);
  SolutionFile solution;
  solution.instance_name = file.name;
  solution.instance_hash = instance_hash(file);
  solution.algo = to_string(params.algo);
  solution.params = param_map(params);
  Rational eps = params.algo == Algorithm::kAptas ? params.epsilon : Rational(1);
  solution.stats = evaluate(inst, packing, eps);
  solution.bins = to_original_bins(inst, packing);
  return solution;
}

VerifyReport verify(const InstanceFile& file, const SolutionFile& solution) {
  VerifyReport report;
  auto& violations = report.violations;
  const Instance& inst = file.instance;
  std::string expected_hash = instance_hash(file);
  if (solution.instance_hash != expected_hash) {
    violations.push_back("instance hash mismatch: solution has " +
                         solution.instance_hash + ", instance file has " +
                         expected_hash);
  }
  std::vector<std::size_t> covered(inst.item_count(), 0);
  bool structure_ok = true;
  for (std::size_t b = 0; b < solution.bins.size(); ++b) {
    const auto& bin = solution.bins[b];
    std::string where = "bins[" + std::to_string(b) + "]";
    if (bin.empty()) {
      violations.push_back(where + " is empty");
      structure_ok = false;
    }
    for (std::size_t position : bin) {
      if (position >= inst.item_count()) {
        violations.push_back(where + ": item " + std::to_string(position) +
                             " does not exist (" +
                             std::to_string(inst.item_count()) + " items)");
        structure_ok = false;
      } else if (++covered[position] == 2) {
        violations.push_back("item " + std::to_string(position) +
                             " covered twice");
        structure_ok = false;
      }
    }
  }
  for (std::size_t position = 0; position < covered.size(); ++position) {
    if (covered[position] == 0) {
      violations.push_back("item " + std::to_string(position) + " not packed");
      structure_ok = false;
    }
  }
  if (!structure_ok) return report;

  Packing packing = from_original_bins(inst, solution.bins);
  for (std::size_t b = 0; b < packing.bins.size(); ++b) {
    Rational load = bin_load(inst, packing.bins[b]);
    if (load > 1) {
      violations.push_back("bins[" + std::to_string(b) + "]: load " +
                           to_exact_string(load) + " exceeds capacity 1");
      structure_ok = false;
    }
  }
  if (!structure_ok) return report;

  Rational eps = stats_epsilon(solution, violations);
  report.recomputed = evaluate(inst, packing, eps);
  const PackingStats& want = report.recomputed;
  const PackingStats& got = solution.stats;
  auto count_check = [&](const char* field, std::size_t reported,
                         std::size_t actual) {
    if (reported != actual) {
      violations.push_back(std::string("stats.") + field + " = " +
                           std::to_string(reported) + ", recomputed " +
                           std::to_string(actual));
    }
  };
  count_check("bins_used", got.bins_used, want.bins_used);
  count_check("large_item_bins", got.large_item_bins, want.large_item_bins);
  count_check("heavy_bins", got.heavy_bins, want.heavy_bins);
  count_check("light_bins", got.light_bins, want.light_bins);
  if (got.energy != want.energy) {
    violations.push_back("stats.energy = " + to_exact_string(got.energy) +
                         ", recomputed " + to_exact_string(want.energy));
  }
  if (got.objective != want.objective) {
    violations.push_back("stats.objective = " + to_exact_string(got.objective) +
                         ", recomputed " + to_exact_string(want.objective));
  }

  Problem problem = Problem::kGbp;
  if (auto it = solution.params.find("problem"); it != solution.params.end()) {
    try {
      problem = parse_problem(it->second);
    } catch (const ContractViolation& e) {
      violations.push_back(std::string("params.problem: ") + e.what());
    }
  }
  if (problem == Problem::kCgbp) {
    if (!inst.budget()) {
      violations.push_back("cgbp solution for an instance without a budget U");
    } else if (want.energy > *inst.budget()) {
      violations.push_back("budget violation: energy " +
                           to_exact_string(want.energy) + " exceeds U = " +
                           to_exact_string(*inst.budget()));
    }
  }
  return report;
}

std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& corpus) {
  std::error_code ec;
  std::filesystem::directory_iterator it(corpus, ec);
  if (ec) throw IoError("cannot list " + corpus.string() + ": " + ec.message());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : it) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return files;
}

BenchReport bench(const std::vector<std::filesystem::path>& files,
                  const BenchOptions& options) {
  BenchReport report;
  for (const auto& path : files) {
    InstanceFile file;
    try {
      file = read_instance(path);
    } catch (const std::exception& e) {
      report.skipped.push_back(path.string() + ": " + e.what());
      continue;
    }
    if (options.params.problem == Problem::kCgbp && !file.instance.budget()) {
      report.skipped.push_back(path.string() + ": cgbp needs a budget U");
      continue;
    }
    std::string instance_name = path.filename().string();
    std::size_t first_row = report.rows.size();
    std::optional<Rational> exact_objective;
    for (Algorithm algo : options.algos) {
      SolveParams params = options.params;
      params.algo = algo;
      BenchRow row;
      row.instance = instance_name;
      row.algo = to_string(algo);
      row.params = joined_params(param_map(params));
      auto start = std::chrono::steady_clock::now();
      try {
        SolutionFile solution = solve(file, params);
        row.solved = true;
        row.bins = solution.stats.bins_used;
        row.energy = solution.stats.energy;
        row.objective = problem_objective(params.problem, solution.stats);
        if (algo == Algorithm::kExact) exact_objective = row.objective;
      } catch (const SearchBudgetExceeded&) {
        row.budget_exhausted = true;
      }
      auto stop = std::chrono::steady_clock::now();
      row.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      report.rows.push_back(std::move(row));
    }
    if (exact_objective) {
      for (std::size_t r = first_row; r < report.rows.size(); ++r) {
        BenchRow& row = report.rows[r];
        if (!row.solved) continue;
        if (*exact_objective == 0) {
          if (row.objective == 0) row.ratio_vs_exact = Rational(1);
        } else {
          row.ratio_vs_exact = Rational(row.objective / *exact_objective);
        }
      }
    }
  }
  return report;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,algo,params,bins,energy_frac,energy_dec,objective_frac,"
         "objective_dec,wall_ms,budget_flag,ratio_vs_exact\n";
  for (const BenchRow& row : rows) {
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", row.wall_ms);
    out << row.instance << ',' << row.algo << ',' << row.params << ',';
    if (row.solved) {
      out << row.bins << ',' << to_fraction_string(row.energy) << ','
          << to_decimal_string(row.energy) << ','
          << to_fraction_string(row.objective) << ','
          << to_decimal_string(row.objective);
    } else {
      out << ",,,,";
    }
    out << ',' << wall << ',' << (row.budget_exhausted ? 1 : 0) << ',';
    if (row.ratio_vs_exact) out << to_decimal_string(*row.ratio_vs_exact);
    out << '\n';
  }
}

}  // namespace greenbp::cli
