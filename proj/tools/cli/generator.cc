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

#include "cli/generator.h"

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "greenbp/errors.h"

namespace greenbp::cli {
namespace {

constexpr std::uint64_t kUniformGrid = 10000;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

SizeDistribution parse_distribution(std::string_view text) {
  auto parts = split(text, ':');
  SizeDistribution dist;
  if (parts[0] == "uniform" && parts.size() == 3) {
    dist.kind = SizeDistribution::Kind::kUniform;
    dist.low = parse_rational(parts[1]);
    dist.high = parse_rational(parts[2]);
    if (dist.low <= 0 || dist.high > 1 || dist.low > dist.high) {
      throw ContractViolation("uniform:a:b needs 0 < a <= b <= 1");
    }
    if (ceil_of(dist.low * kUniformGrid) > floor_of(dist.high * kUniformGrid)) {
      throw ContractViolation("uniform:a:b contains no multiple of 1/10000");
    }
    return dist;
  }
  if (parts[0] == "grid" && parts.size() == 2) {
    dist.kind = SizeDistribution::Kind::kGrid;
    Rational d = parse_rational(parts[1]);
    if (!is_integral(d) || d < 1 || d > 1'000'000) {
      throw ContractViolation("grid:D needs an integer D in [1, 1000000]");
    }
    dist.max_denominator = d.get_num().get_ui();
    return dist;
  }
  throw ContractViolation("unknown size distribution \"" + std::string(text) +
                          "\"; use uniform:a:b or grid:D");
}

std::string to_string(const SizeDistribution& dist) {
  if (dist.kind == SizeDistribution::Kind::kGrid) {
    return "grid:" + std::to_string(dist.max_denominator);
  }
  return "uniform:" + to_exact_string(dist.low) + ":" + to_exact_string(dist.high);
}

BudgetMode parse_budget_mode(std::string_view text) {
  BudgetMode mode;
  if (text == "none") return mode;
  if (text == "tight") {
    mode.kind = BudgetMode::Kind::kTight;
    return mode;
  }
  if (text.substr(0, 6) == "slack:") {
    mode.kind = BudgetMode::Kind::kSlack;
    mode.slack = parse_rational(text.substr(6));
    if (mode.slack < 1) throw ContractViolation("slack:r needs r >= 1");
    return mode;
  }
  throw ContractViolation("unknown budget mode \"" + std::string(text) +
                          "\"; use none, tight or slack:r");
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t low,
                          std::uint64_t high) {
  if (low > high) throw ContractViolation("uniform_int: empty range");
  std::uint64_t span = high - low;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  std::uint64_t range = span + 1;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return low + draw % range;
}

InstanceFile generate(const GenerateOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Rational> sizes;
  sizes.reserve(options.n);
  const SizeDistribution& dist = options.dist;
  std::uint64_t grid_low = 0;
  std::uint64_t grid_high = 0;
  if (dist.kind == SizeDistribution::Kind::kUniform) {
    grid_low = ceil_of(dist.low * kUniformGrid).get_ui();
    grid_high = floor_of(dist.high * kUniformGrid).get_ui();
  }
  for (std::size_t i = 0; i < options.n; ++i) {
    Rational s;
    if (dist.kind == SizeDistribution::Kind::kUniform) {
      s = Rational(uniform_int(rng, grid_low, grid_high), kUniformGrid);
    } else {
      std::uint64_t d = uniform_int(rng, 1, dist.max_denominator);
      std::uint64_t p = uniform_int(rng, 1, d);
      s = Rational(p, d);
    }
    s.canonicalize();
    sizes.push_back(std::move(s));
  }
  Instance unbudgeted(std::move(sizes), options.beta, options.green);
  std::optional<Rational> budget;
  switch (options.budget.kind) {
    case BudgetMode::Kind::kNone:
      break;
    case BudgetMode::Kind::kTight:
      budget = unbudgeted.singleton_energy();
      break;
    case BudgetMode::Kind::kSlack:
      budget = Rational(unbudgeted.singleton_energy() * options.budget.slack);
      break;
  }
  InstanceFile file;
  file.name = options.name;
  file.instance = unbudgeted.with_budget(std::move(budget));
  return file;
}

}  // namespace greenbp::cli
