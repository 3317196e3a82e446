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

#include "greenbp/oracle.h"

#include <algorithm>
#include <string>
#include <vector>

#include "greenbp/baselines.h"
#include "greenbp/errors.h"

namespace greenbp {
namespace {

// Depth-first search over canonical set partitions. Item i (in canonical
// order) either joins one of the bins opened so far or opens the next bin.
//
// Lower bounds use only two facts about a completion that adds `extra` new
// bins: a bin's energy grows by at least beta times the part of its added
// mass that overflows its remaining green space, and a new bin offers at most
// G of green space. With R the remaining mass and g the green space left in
// the open bins, the completion's energy is at least
// E + beta * max{0, R - g - extra * G}.
class PartitionSearch {
 public:
  PartitionSearch(const Instance& instance, Problem problem,
                  const Rational* budget, std::uint64_t node_budget)
      : inst_(instance), problem_(problem), budget_(budget),
        node_budget_(node_budget), n_(instance.item_count()),
        suffix_(n_ + 1, Rational(0)), assign_(n_, 0) {
    for (std::size_t i = n_; i-- > 0;) suffix_[i] = suffix_[i + 1] + inst_.size(i);
  }

  // Seeds the search with an upper bound from a known feasible packing.
  void seed(const Packing& packing) {
    Rational e = 0;
    for (const auto& bin : packing.bins) e += load_energy(bin_load(inst_, bin));
    if (budget_ != nullptr && e > *budget_) return;
    Rational primary = primary_of(packing.bin_count(), e);
    if (!seeded_ || less(primary, e, seed_primary_, seed_energy_)) {
      seeded_ = true;
      seed_primary_ = primary;
      seed_energy_ = e;
    }
  }

  OracleResult run() {
    visit(0);
    if (!found_) {
      // Unreachable with a valid seed; kept as a hard failure.
      throw SearchBudgetExceeded("oracle found no feasible packing");
    }
    OracleResult result;
    result.packing.bins.resize(best_bins_);
    for (ItemId i = 0; i < n_; ++i) result.packing.bins[best_assign_[i]].push_back(i);
    result.stats = evaluate(inst_, result.packing);
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  Rational load_energy(const Rational& load) const {
    if (load <= inst_.green()) return 0;
    return inst_.beta() * (load - inst_.green());
  }

  Rational primary_of(std::size_t bins, const Rational& e) const {
    Rational b(static_cast<unsigned long>(bins));
    return problem_ == Problem::kGbp ? Rational(b + e) : b;
  }

  static bool less(const Rational& p1, const Rational& e1, const Rational& p2,
                   const Rational& e2) {
    return p1 < p2 || (p1 == p2 && e1 < e2);
  }

  // Lower bound on the energy of any completion that opens `extra` more bins.
  Rational energy_floor(std::size_t item, const Rational& extra) const {
    Rational overflow = suffix_[item] - green_left_ - extra * inst_.green();
    if (overflow <= 0) return energy_;
    return energy_ + inst_.beta() * overflow;
  }

  // Fewest new bins the remaining mass needs by capacity alone.
  Integer capacity_extra(std::size_t item) const {
    const Rational free = Rational(static_cast<unsigned long>(loads_.size())) - placed_;
    Integer need = ceil_of(suffix_[item] - free);
    return need < 0 ? Integer(0) : need;
  }

  bool prune_gbp(std::size_t item) const {
    const Integer k_min = capacity_extra(item);
    const Integer k_max(static_cast<unsigned long>(n_ - item));
    const Rational k(static_cast<unsigned long>(loads_.size()));

    // k' + beta * max{0, R - g - k' G} is convex piecewise linear in k', with
    // its kink at (R - g) / G.
    auto cost = [&](const Integer& extra) {
      return Rational(Rational(extra) + energy_floor(item, Rational(extra)));
    };
    Rational bound = cost(k_min);
    if (inst_.green() > 0) {
      const Rational kink = (suffix_[item] - green_left_) / inst_.green();
      for (Integer extra : {floor_of(kink), ceil_of(kink)}) {
        if (extra > k_max) extra = k_max;
        if (extra < k_min) extra = k_min;
        Rational value = cost(extra);
        if (value < bound) bound = value;
      }
    }
    bound += k;

    const Rational& upper = found_ ? best_primary_ : seed_primary_;
    if (bound > upper) return true;
    if (found_ && bound == best_primary_) {
      Integer k_hi = floor_of(best_primary_ - k - energy_);
      if (k_hi > k_max) k_hi = k_max;
      if (k_hi < k_min) return true;
      if (energy_floor(item, Rational(k_hi)) >= best_energy_) return true;
    }
    return false;
  }

  bool prune_cgbp(std::size_t item) const {
    const Rational& budget = *budget_;
    if (energy_ > budget) return true;
    const Integer k_max(static_cast<unsigned long>(n_ - item));
    Integer extra = capacity_extra(item);
    if (energy_floor(item, Rational(extra)) > budget) {
      if (inst_.green() == 0) return true;
      // Smallest k' with beta * (R - g - k' G) <= U - E.
      const Rational slack = (budget - energy_) / inst_.beta();
      Integer needed =
          ceil_of((suffix_[item] - green_left_ - slack) / inst_.green());
      extra = std::max(extra, needed);
    }
    if (extra > k_max) return true;

    const unsigned long k = loads_.size();
    const Rational bound = Rational(extra + k);
    const Rational& upper = found_ ? best_primary_ : seed_primary_;
    if (bound > upper) return true;
    if (found_ && bound == best_primary_) {
      Rational allowed = best_primary_ - k;
      if (energy_floor(item, allowed) >= best_energy_) return true;
    }
    return false;
  }

  void record_leaf() {
    if (budget_ != nullptr && energy_ > *budget_) return;
    Rational primary = primary_of(loads_.size(), energy_);
    bool accept = found_ ? less(primary, energy_, best_primary_, best_energy_)
                         : !less(seed_primary_, seed_energy_, primary, energy_);
    if (!accept) return;
    found_ = true;
    best_primary_ = primary;
    best_energy_ = energy_;
    best_bins_ = loads_.size();
    best_assign_ = assign_;
  }

  void place(std::size_t bin, const Rational& size) {
    const Rational& green = inst_.green();
    Rational& load = loads_[bin];
    energy_ -= load_energy(load);
    if (load < green) green_left_ -= green - load;
    load += size;
    energy_ += load_energy(load);
    if (load < green) green_left_ += green - load;
    placed_ += size;
  }

  void visit(std::size_t item) {
    if (++nodes_ > node_budget_) {
      throw SearchBudgetExceeded("oracle budget exceeded after " +
                                 std::to_string(node_budget_) + " nodes");
    }
    if (item == n_) {
      record_leaf();
      return;
    }
    if (problem_ == Problem::kGbp ? prune_gbp(item) : prune_cgbp(item)) return;

    const Rational& size = inst_.size(item);
    const Rational saved_energy = energy_;
    const Rational saved_green = green_left_;
    for (std::size_t bin = 0; bin < loads_.size(); ++bin) {
      if (loads_[bin] + size > 1) continue;
      const Rational saved_load = loads_[bin];
      place(bin, size);
      assign_[item] = bin;
      visit(item + 1);
      loads_[bin] = saved_load;
      energy_ = saved_energy;
      green_left_ = saved_green;
      placed_ -= size;
    }

    loads_.push_back(0);
    green_left_ += inst_.green();
    place(loads_.size() - 1, size);
    assign_[item] = loads_.size() - 1;
    visit(item + 1);
    loads_.pop_back();
    energy_ = saved_energy;
    green_left_ = saved_green;
    placed_ -= size;
  }

  const Instance& inst_;
  Problem problem_;
  const Rational* budget_;
  std::uint64_t node_budget_;
  std::size_t n_;
  std::vector<Rational> suffix_;

  std::vector<Rational> loads_;
  std::vector<std::size_t> assign_;
  Rational energy_ = 0;
  Rational green_left_ = 0;  // sum over open bins of max{0, G - load}
  Rational placed_ = 0;
  std::uint64_t nodes_ = 0;

  bool seeded_ = false;
  Rational seed_primary_;
  Rational seed_energy_;

  bool found_ = false;
  Rational best_primary_;
  Rational best_energy_;
  std::size_t best_bins_ = 0;
  std::vector<std::size_t> best_assign_;
};

OracleResult empty_result() {
  OracleResult result;
  result.stats = PackingStats{};
  return result;
}

}  // namespace

OracleResult solve_exact_gbp(const Instance& instance,
                             const OracleOptions& options) {
  if (instance.empty()) return empty_result();
  PartitionSearch search(instance, Problem::kGbp, nullptr, options.node_budget);
  search.seed(singleton_packing(instance));
  search.seed(ffd(instance));
  return search.run();
}

OracleResult solve_exact_cgbp(const Instance& instance,
                              const OracleOptions& options) {
  if (!instance.budget()) {
    throw ContractViolation("CGBP needs an energy budget U");
  }
  return solve_exact_cgbp(instance, *instance.budget(), options);
}

OracleResult solve_exact_cgbp(const Instance& instance, const Rational& budget,
                              const OracleOptions& options) {
  if (budget < instance.singleton_energy()) {
    throw InfeasibleBudget("budget U = " + to_fraction_string(budget) +
                           " is below the singleton-packing energy " +
                           to_fraction_string(instance.singleton_energy()));
  }
  if (instance.empty()) return empty_result();
  PartitionSearch search(instance, Problem::kCgbp, &budget, options.node_budget);
  search.seed(singleton_packing(instance));
  search.seed(ffd(instance));
  return search.run();
}

}  // namespace greenbp
