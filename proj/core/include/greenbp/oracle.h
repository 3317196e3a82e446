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

#ifndef GREENBP_ORACLE_H_
#define GREENBP_ORACLE_H_

#include <cstdint>

#include "greenbp/model.h"
#include "greenbp/rational.h"

namespace greenbp {

struct OracleOptions {
  // Search nodes visited before giving up with SearchBudgetExceeded.
  std::uint64_t node_budget = 10'000'000;
};

struct OracleResult {
  Packing packing;
  PackingStats stats;
  std::uint64_t nodes_explored = 0;
};

// Exact GBP optimum: minimum bins + energy, and among the minimizers the
// minimum energy. Enumerates set partitions canonically (each item joins an
// earlier bin or opens the next one) with branch and bound; among exact ties
// the first partition in that order wins.
//
// Throws SearchBudgetExceeded when the node budget runs out; never returns a
// partial answer.
OracleResult solve_exact_gbp(const Instance& instance,
                             const OracleOptions& options = {});

// Exact CGBP optimum against the instance budget: minimum bins subject to
// energy <= U, then minimum energy. Throws ContractViolation if the instance
// has no budget.
OracleResult solve_exact_cgbp(const Instance& instance,
                              const OracleOptions& options = {});

// Same, with an explicit budget (the instance's own budget is ignored).
// Throws InfeasibleBudget when U is below the singleton-packing energy.
OracleResult solve_exact_cgbp(const Instance& instance, const Rational& budget,
                              const OracleOptions& options = {});

}  // namespace greenbp

#endif  // GREENBP_ORACLE_H_
