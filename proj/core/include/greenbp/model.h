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

#ifndef GREENBP_MODEL_H_
#define GREENBP_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greenbp/rational.h"

namespace greenbp {

// Index of an item in an Instance's canonical (non-increasing) order.
using ItemId = std::size_t;

enum class Problem {
  kGbp,   // minimize bins + energy
  kCgbp,  // minimize bins subject to energy <= U
};

std::string to_string(Problem problem);
Problem parse_problem(std::string_view text);

// Energy drawn by a bin of the given load: max{0, beta * (load - green)}.
// Throws ContractViolation when load is outside [0, 1], beta < 0 or green is
// outside [0, 1].
Rational energy(const Rational& beta, const Rational& green,
                const Rational& load);

// A Green Bin Packing instance. Sizes are stored in canonical order:
// non-increasing, ties broken by the caller's original position. The original
// positions are kept so results can be reported in the caller's order.
class Instance {
 public:
  Instance() = default;

  // Throws ContractViolation for sizes outside (0, 1], beta < 0, green outside
  // [0, 1] or a negative budget, and InfeasibleBudget when the budget is below
  // the singleton-packing energy.
  Instance(std::vector<Rational> sizes, Rational beta, Rational green,
           std::optional<Rational> budget = std::nullopt);

  std::size_t item_count() const { return sizes_.size(); }
  bool empty() const { return sizes_.empty(); }

  const std::vector<Rational>& sizes() const { return sizes_; }
  const Rational& size(ItemId item) const { return sizes_[item]; }
  const Rational& beta() const { return beta_; }
  const Rational& green() const { return green_; }
  const std::optional<Rational>& budget() const { return budget_; }

  // Position of a canonical item in the caller-supplied size list.
  std::size_t original_index(ItemId item) const { return original_[item]; }
  const std::vector<std::size_t>& original_indices() const { return original_; }

  const Rational& total_size() const { return total_size_; }

  // Sum of energy(s_i): the least energy any packing can reach.
  const Rational& singleton_energy() const { return singleton_energy_; }

  Rational energy_of_load(const Rational& load) const {
    return energy(beta_, green_, load);
  }

  // Same items and parameters with the budget replaced (or removed).
  Instance with_budget(std::optional<Rational> budget) const;

 private:
  std::vector<Rational> sizes_;
  std::vector<std::size_t> original_;
  Rational beta_ = 0;
  Rational green_ = 1;
  std::optional<Rational> budget_;
  Rational total_size_ = 0;
  Rational singleton_energy_ = 0;
};

// A partition of canonical item ids into non-empty bins.
struct Packing {
  std::vector<std::vector<ItemId>> bins;

  std::size_t bin_count() const { return bins.size(); }
  friend bool operator==(const Packing&, const Packing&) = default;
};

// Items sorted within each bin, bins sorted lexicographically. Two packings
// describe the same partition iff their canonical forms are equal.
Packing canonical_form(Packing packing);

// Every item alone in its own bin.
Packing singleton_packing(const Instance& instance);

Rational bin_load(const Instance& instance, std::span<const ItemId> bin);

// Throws FeasibilityError naming the first offending bin or item: an empty or
// overfull bin, an unknown item id, or an item covered zero or two times.
void check_feasible(const Instance& instance, const Packing& packing);

enum class ItemClass { kLarge, kMedium, kTiny };

// Item partition by size. Large: s > max{G, eps/3}. Medium: delta < s <=
// max{G, eps/3}. Tiny: s <= delta.
struct ItemClasses {
  std::vector<ItemId> large;
  std::vector<ItemId> medium;
  std::vector<ItemId> tiny;
  std::vector<ItemClass> of;  // indexed by ItemId
  Rational epsilon;
  Rational delta;
  Rational large_threshold;  // max{G, eps/3}
};

// Throws ContractViolation unless 0 < epsilon <= 1 and 1/epsilon is integral.
void require_valid_epsilon(const Rational& epsilon);

// delta may be zero (the G = 0 case), which leaves the tiny set empty.
// Throws ContractViolation for an invalid epsilon or delta outside
// [0, max{G, eps/3}].
ItemClasses classify_items(const Instance& instance, const Rational& epsilon,
                           const Rational& delta);

enum class BinClass { kLargeItem, kHeavy, kLight };

BinClass classify_bin(std::span<const ItemId> bin, const Instance& instance,
                      const ItemClasses& classes);

struct PackingStats {
  std::size_t bins_used = 0;
  std::size_t large_item_bins = 0;
  std::size_t heavy_bins = 0;
  std::size_t light_bins = 0;
  Rational energy = 0;
  Rational objective = 0;  // bins_used + energy

  friend bool operator==(const PackingStats&, const PackingStats&) = default;
};

// Checks feasibility (throws FeasibilityError) and computes the statistics.
// Bin classes use the large threshold max{G, epsilon/3}.
PackingStats evaluate(const Instance& instance, const Packing& packing,
                      const Rational& epsilon = 1);

// The quantity a problem minimizes: bins + energy for GBP, bins for CGBP.
Rational problem_objective(Problem problem, const PackingStats& stats);

}  // namespace greenbp

#endif  // GREENBP_MODEL_H_
