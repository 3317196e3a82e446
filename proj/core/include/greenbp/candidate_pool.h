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

#ifndef GREENBP_CANDIDATE_POOL_H_
#define GREENBP_CANDIDATE_POOL_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "greenbp/model.h"
#include "greenbp/rational.h"

namespace greenbp {

struct Candidate {
  Packing packing;  // canonical form
  std::size_t bins = 0;
  Rational energy = 0;
};

// Streaming reduction of candidate packings. Keeps the Pareto front over
// (bins, energy); both the GBP optimum (min bins + energy) and the CGBP
// optimum (min bins with energy <= U, then min energy) of everything offered
// lie on it. Exact ties keep the lexicographically smaller canonical packing,
// so the result does not depend on the order of offers.
class CandidatePool {
 public:
  explicit CandidatePool(const Instance& instance) : instance_(&instance) {}

  // Drops empty bins, checks feasibility (throws FeasibilityError) and keeps
  // the packing if nothing on the front dominates it.
  void offer(Packing packing);

  // Offers a candidate whose statistics are already known.
  void offer(Candidate candidate);

  // Sorted by bins ascending; energies strictly decrease along the front.
  const std::vector<Candidate>& front() const { return front_; }

  std::size_t offered() const { return offered_; }

  std::optional<Candidate> best_gbp() const;
  std::optional<Candidate> best_cgbp(const Rational& budget) const;

  // GBP, or CGBP against the instance budget (ContractViolation when the
  // instance has none).
  std::optional<Candidate> best(Problem problem) const;

 private:
  const Instance* instance_;
  std::vector<Candidate> front_;
  std::size_t offered_ = 0;
};

}  // namespace greenbp

#endif  // GREENBP_CANDIDATE_POOL_H_
