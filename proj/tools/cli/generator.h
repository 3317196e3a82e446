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

#ifndef GREENBP_TOOLS_CLI_GENERATOR_H_
#define GREENBP_TOOLS_CLI_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "cli/files.h"
#include "greenbp/rational.h"

namespace greenbp::cli {

// Sizes k / 10000 with k uniform over the grid points in [low, high], or
// p / d with d uniform in [1, max_denominator] and p uniform in [1, d].
struct SizeDistribution {
  enum class Kind { kUniform, kGrid };
  Kind kind = Kind::kUniform;
  Rational low = Rational(1, 100);
  Rational high = 1;
  std::uint64_t max_denominator = 10;
};

// "uniform:a:b" or "grid:D". Throws ContractViolation on bad parameters.
SizeDistribution parse_distribution(std::string_view text);
std::string to_string(const SizeDistribution& dist);

struct BudgetMode {
  enum class Kind { kNone, kTight, kSlack };
  Kind kind = Kind::kNone;
  Rational slack = 1;  // U = singleton energy * slack
};

// "none", "tight" or "slack:r" with r >= 1.
BudgetMode parse_budget_mode(std::string_view text);

struct GenerateOptions {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  SizeDistribution dist;
  Rational beta = 1;
  Rational green = Rational(1, 2);
  BudgetMode budget;
  std::string name;
};

// Same options, same file (byte for byte).
InstanceFile generate(const GenerateOptions& options);

// Uniform integer in [low, high] by rejection sampling, independent of the
// standard library's distribution implementations.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t low,
                          std::uint64_t high);

}  // namespace greenbp::cli

#endif  // GREENBP_TOOLS_CLI_GENERATOR_H_
