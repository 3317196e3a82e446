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

#include "cli/app.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/files.h"
#include "cli/generator.h"
#include "greenbp/errors.h"

namespace greenbp::cli {
namespace {

struct GenFlags {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string dist = "uniform:0.01:1";
  std::string beta = "1";
  std::string green = "0.5";
  std::string budget = "none";
  std::string name = "inst";
  std::size_t count = 0;
  std::string out;
};

struct SolveFlags {
  std::string algo = "ffd";
  std::string epsilon = "1";
  std::string tau = "0";
  std::string problem = "gbp";
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 0;
  std::string order = "canonical";
};

void add_solve_flags(CLI::App* cmd, SolveFlags& flags, bool single_algo) {
  if (single_algo) {
    cmd->add_option("--algo", flags.algo,
                    "exact, aptas, approx32, nf, ff, ffd or tnf")
        ->capture_default_str();
  }
  cmd->add_option("--epsilon", flags.epsilon, "aptas accuracy, 1/epsilon integral")
      ->capture_default_str();
  cmd->add_option("--tau", flags.tau, "tnf threshold offset in [0, 1 - G]")
      ->capture_default_str();
  cmd->add_option("--problem", flags.problem, "gbp or cgbp")->capture_default_str();
  cmd->add_option("--seed", flags.seed, "recorded with the solution")
      ->capture_default_str();
  cmd->add_option("--node-budget", flags.node_budget,
                  "search node budget (0 keeps the default)")
      ->capture_default_str();
  cmd->add_option("--order", flags.order, "nf/ff item order: canonical or original")
      ->capture_default_str();
}

SolveParams to_params(const SolveFlags& flags) {
  SolveParams params;
  params.algo = parse_algorithm(flags.algo);
  params.problem = parse_problem(flags.problem);
  params.epsilon = parse_rational(flags.epsilon);
  params.tau = parse_rational(flags.tau);
  params.seed = flags.seed;
  params.node_budget = flags.node_budget;
  if (flags.order == "original") {
    params.original_order = true;
  } else if (flags.order != "canonical") {
    throw ContractViolation("--order must be canonical or original");
  }
  return params;
}

std::vector<Algorithm> parse_algorithm_list(const std::string& text) {
  std::vector<Algorithm> algos;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) algos.push_back(parse_algorithm(item));
  }
  if (algos.empty()) throw ContractViolation("--algos lists no algorithm");
  return algos;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text(path, text);
  }
}

int run_gen(const GenFlags& flags, std::ostream& out) {
  GenerateOptions options;
  options.n = flags.n;
  options.dist = parse_distribution(flags.dist);
  options.beta = parse_rational(flags.beta);
  options.green = parse_rational(flags.green);
  options.budget = parse_budget_mode(flags.budget);
  if (flags.count == 0) {
    options.seed = flags.seed;
    options.name = flags.name;
    emit(flags.out, instance_to_json(generate(options)).dump(2) + "\n", out);
    return kExitOk;
  }
  if (flags.out.empty() || flags.out == "-") {
    throw ContractViolation("--count needs --out naming a directory");
  }
  for (std::size_t i = 0; i < flags.count; ++i) {
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "-%04zu", i);
    options.seed = flags.seed + i;
    options.name = flags.name + suffix;
    write_instance(std::filesystem::path(flags.out) / (options.name + ".json"),
                   generate(options));
  }
  return kExitOk;
}

int run_solve(const std::string& instance_path, const SolveFlags& flags,
              const std::string& out_path, std::ostream& out) {
  SolveParams params = to_params(flags);
  InstanceFile file = read_instance(instance_path);
  SolutionFile solution = solve(file, params);
  emit(out_path, solution_to_json(solution).dump(2) + "\n", out);
  return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out) {
  InstanceFile file = read_instance(instance_path);
  SolutionFile solution = read_solution(solution_path);
  VerifyReport report = verify(file, solution);
  if (report.ok()) {
    out << "ok: " << report.recomputed.bins_used << " bins, energy "
        << to_exact_string(report.recomputed.energy) << ", objective "
        << to_exact_string(report.recomputed.objective) << "\n";
    return kExitOk;
  }
  for (const auto& violation : report.violations) {
    out << "violation: " << violation << "\n";
  }
  return kExitVerifyFailed;
}

int run_bench(const std::string& corpus, const std::string& algos,
              const SolveFlags& flags, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  BenchOptions options;
  options.algos = parse_algorithm_list(algos);
  options.params = to_params(flags);
  std::vector<std::filesystem::path> files = list_corpus(corpus);
  BenchReport report = bench(files, options);
  std::ostringstream csv;
  write_csv(csv, report.rows);
  emit(out_path, csv.str(), out);
  for (const auto& message : report.skipped) err << "skipped: " << message << "\n";
  if (files.empty()) {
    err << "warning: nothing to do, no instance files in " << corpus << "\n";
    return kExitInputError;
  }
  return report.skipped.empty() ? kExitOk : kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Green bin packing solvers and tools", "greenbp"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate random instances");
  gen_cmd->add_option("--n", gen.n, "items per instance")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed (corpus: seed + i)")
      ->capture_default_str();
  gen_cmd->add_option("--dist", gen.dist, "uniform:a:b or grid:D")
      ->capture_default_str();
  gen_cmd->add_option("--beta", gen.beta, "energy rate")->capture_default_str();
  gen_cmd->add_option("--green", gen.green, "green space G")->capture_default_str();
  gen_cmd->add_option("--budget", gen.budget, "none, tight or slack:r")
      ->capture_default_str();
  gen_cmd->add_option("--name", gen.name, "instance name (corpus prefix)")
      ->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "write this many files into --out")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "output file or corpus directory");

  std::string instance_path;
  std::string solution_path;
  std::string out_path;
  SolveFlags solve_flags;
  CLI::App* solve_cmd = app.add_subcommand("solve", "pack an instance");
  solve_cmd->add_option("instance", instance_path, "instance JSON")->required();
  add_solve_flags(solve_cmd, solve_flags, true);
  solve_cmd->add_option("--out", out_path, "solution JSON (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution");
  verify_cmd->add_option("instance", instance_path, "instance JSON")->required();
  verify_cmd->add_option("solution", solution_path, "solution JSON")->required();

  std::string corpus;
  std::string algos = "exact,aptas,approx32,nf,ff,ffd,tnf";
  CLI::App* bench_cmd = app.add_subcommand("bench", "run algorithms over a corpus");
  bench_cmd->add_option("corpus", corpus, "directory of instance JSON files")
      ->required();
  bench_cmd->add_option("--algos", algos, "comma-separated algorithms")
      ->capture_default_str();
  add_solve_flags(bench_cmd, solve_flags, false);
  bench_cmd->add_option("--out", out_path, "CSV report (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (solve_cmd->parsed()) return run_solve(instance_path, solve_flags, out_path, out);
    if (verify_cmd->parsed()) return run_verify(instance_path, solution_path, out);
    if (bench_cmd->parsed()) {
      return run_bench(corpus, algos, solve_flags, out_path, out, err);
    }
  } catch (const InfeasibleBudget& e) {
    err << "error: infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const SearchBudgetExceeded& e) {
    err << "error: search budget exhausted: " << e.what() << "\n";
    return kExitBudgetExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace greenbp::cli
