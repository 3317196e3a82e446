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

#include "greenbp/candidate_pool.h"

#include <algorithm>
#include <string>

#include "greenbp/errors.h"

namespace greenbp {

void CandidatePool::offer(Packing packing) {
  std::erase_if(packing.bins, [](const auto& bin) { return bin.empty(); });

  const Instance& inst = *instance_;
  std::vector<char> seen(inst.item_count(), 0);
  std::size_t covered = 0;
  Rational energy = 0;
  Rational load;
  for (const auto& bin : packing.bins) {
    load = 0;
    for (ItemId item : bin) {
      if (item >= inst.item_count() || seen[item]) {
        throw FeasibilityError("candidate covers item " +
                               std::to_string(item) + " twice or out of range");
      }
      seen[item] = 1;
      ++covered;
      load += inst.size(item);
    }
    if (load > 1) throw FeasibilityError("candidate has an overfull bin");
    energy += inst.energy_of_load(load);
  }
  if (covered != inst.item_count()) {
    throw FeasibilityError("candidate leaves items unpacked");
  }

  Candidate candidate;
  candidate.bins = packing.bin_count();
  candidate.energy = std::move(energy);
  candidate.packing = std::move(packing);
  offer(std::move(candidate));
}

void CandidatePool::offer(Candidate candidate) {
  ++offered_;
  for (auto& kept : front_) {
    if (kept.bins <= candidate.bins && kept.energy <= candidate.energy) {
      if (kept.bins != candidate.bins || kept.energy != candidate.energy) {
        return;
      }
      candidate.packing = canonical_form(std::move(candidate.packing));
      if (!(candidate.packing.bins < kept.packing.bins)) return;
      kept = std::move(candidate);
      return;
    }
  }
  candidate.packing = canonical_form(std::move(candidate.packing));
  std::erase_if(front_, [&](const Candidate& kept) {
    return kept.bins >= candidate.bins && kept.energy >= candidate.energy;
  });
  auto pos = std::lower_bound(
      front_.begin(), front_.end(), candidate.bins,
      [](const Candidate& c, std::size_t bins) { return c.bins < bins; });
  front_.insert(pos, std::move(candidate));
}

std::optional<Candidate> CandidatePool::best_gbp() const {
  const Candidate* best = nullptr;
  Rational best_objective;
  for (const auto& c : front_) {
    Rational objective = c.energy + static_cast<unsigned long>(c.bins);
    if (best == nullptr || objective < best_objective ||
        (objective == best_objective && c.energy < best->energy)) {
      best = &c;
      best_objective = objective;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<Candidate> CandidatePool::best_cgbp(const Rational& budget) const {
  for (const auto& c : front_) {
    if (c.energy <= budget) return c;
  }
  return std::nullopt;
}

std::optional<Candidate> CandidatePool::best(Problem problem) const {
  if (problem == Problem::kGbp) return best_gbp();
  if (!instance_->budget()) {
    throw ContractViolation("CGBP selection needs an instance budget U");
  }
  return best_cgbp(*instance_->budget());
}

}  // namespace greenbp
