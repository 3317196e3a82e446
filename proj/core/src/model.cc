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

#include "greenbp/model.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "greenbp/errors.h"

namespace greenbp {

std::string to_string(Problem problem) {
  return problem == Problem::kGbp ? "gbp" : "cgbp";
}

Problem parse_problem(std::string_view text) {
  if (text == "gbp") return Problem::kGbp;
  if (text == "cgbp") return Problem::kCgbp;
  throw ContractViolation("unknown problem \"" + std::string(text) +
                          "\" (expected gbp or cgbp)");
}

Rational energy(const Rational& beta, const Rational& green,
                const Rational& load) {
  if (load < 0 || load > 1) {
    throw ContractViolation("load " + to_fraction_string(load) +
                            " outside [0, 1]");
  }
  if (beta < 0) throw ContractViolation("beta must be non-negative");
  if (green < 0 || green > 1) throw ContractViolation("G outside [0, 1]");
  if (load <= green) return 0;
  return beta * (load - green);
}

Instance::Instance(std::vector<Rational> sizes, Rational beta, Rational green,
                   std::optional<Rational> budget)
    : beta_(std::move(beta)), green_(std::move(green)),
      budget_(std::move(budget)) {
  if (beta_ < 0) {
    throw ContractViolation("beta " + to_fraction_string(beta_) +
                            " is negative");
  }
  if (green_ < 0 || green_ > 1) {
    throw ContractViolation("G " + to_fraction_string(green_) +
                            " outside [0, 1]");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0 || sizes[i] > 1) {
      throw ContractViolation("size #" + std::to_string(i) + " = " +
                              to_fraction_string(sizes[i]) +
                              " outside (0, 1]");
    }
  }

  original_.resize(sizes.size());
  std::iota(original_.begin(), original_.end(), std::size_t{0});
  std::stable_sort(original_.begin(), original_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return sizes[a] > sizes[b];
                   });
  sizes_.reserve(sizes.size());
  for (std::size_t index : original_) sizes_.push_back(sizes[index]);

  for (const Rational& s : sizes_) {
    total_size_ += s;
    singleton_energy_ += energy(beta_, green_, s);
  }

  if (budget_) {
    if (*budget_ < 0) throw ContractViolation("budget U is negative");
    if (*budget_ < singleton_energy_) {
      throw InfeasibleBudget("budget U = " + to_fraction_string(*budget_) +
                             " is below the singleton-packing energy " +
                             to_fraction_string(singleton_energy_));
    }
  }
}

Instance Instance::with_budget(std::optional<Rational> budget) const {
  if (budget) {
    if (*budget < 0) throw ContractViolation("budget U is negative");
    if (*budget < singleton_energy_) {
      throw InfeasibleBudget("budget U = " + to_fraction_string(*budget) +
                             " is below the singleton-packing energy " +
                             to_fraction_string(singleton_energy_));
    }
  }
  Instance copy = *this;
  copy.budget_ = std::move(budget);
  return copy;
}

Packing canonical_form(Packing packing) {
  for (auto& bin : packing.bins) std::sort(bin.begin(), bin.end());
  std::sort(packing.bins.begin(), packing.bins.end());
  return packing;
}

Packing singleton_packing(const Instance& instance) {
  Packing packing;
  packing.bins.reserve(instance.item_count());
  for (ItemId i = 0; i < instance.item_count(); ++i) packing.bins.push_back({i});
  return packing;
}

Rational bin_load(const Instance& instance, std::span<const ItemId> bin) {
  Rational load = 0;
  for (ItemId item : bin) load += instance.size(item);
  return load;
}

void check_feasible(const Instance& instance, const Packing& packing) {
  std::vector<int> seen(instance.item_count(), -1);
  for (std::size_t b = 0; b < packing.bins.size(); ++b) {
    const auto& bin = packing.bins[b];
    if (bin.empty()) {
      throw FeasibilityError("bin " + std::to_string(b) + " is empty");
    }
    for (ItemId item : bin) {
      if (item >= instance.item_count()) {
        throw FeasibilityError("bin " + std::to_string(b) +
                               " holds unknown item " + std::to_string(item));
      }
      if (seen[item] >= 0) {
        throw FeasibilityError("item " + std::to_string(item) +
                               " covered twice (bins " +
                               std::to_string(seen[item]) + " and " +
                               std::to_string(b) + ")");
      }
      seen[item] = static_cast<int>(b);
    }
    Rational load = bin_load(instance, bin);
    if (load > 1) {
      throw FeasibilityError("bin " + std::to_string(b) + " overfull: load " +
                             to_fraction_string(load) + " > 1");
    }
  }
  for (ItemId item = 0; item < instance.item_count(); ++item) {
    if (seen[item] < 0) {
      throw FeasibilityError("item " + std::to_string(item) + " not packed");
    }
  }
}

void require_valid_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > 1) {
    throw ContractViolation("epsilon " + to_fraction_string(epsilon) +
                            " outside (0, 1]");
  }
  if (epsilon.get_num() != 1) {
    throw ContractViolation("1/epsilon must be an integer, got epsilon = " +
                            to_fraction_string(epsilon));
  }
}

namespace {

Rational large_threshold(const Instance& instance, const Rational& epsilon) {
  Rational third = epsilon / 3;
  return instance.green() > third ? instance.green() : third;
}

}  // namespace

ItemClasses classify_items(const Instance& instance, const Rational& epsilon,
                           const Rational& delta) {
  require_valid_epsilon(epsilon);
  ItemClasses classes;
  classes.epsilon = epsilon;
  classes.delta = delta;
  classes.large_threshold = large_threshold(instance, epsilon);
  if (delta < 0 || delta > classes.large_threshold) {
    throw ContractViolation("delta " + to_fraction_string(delta) +
                            " outside [0, max{G, eps/3}]");
  }
  classes.of.resize(instance.item_count());
  for (ItemId i = 0; i < instance.item_count(); ++i) {
    const Rational& s = instance.size(i);
    if (s > classes.large_threshold) {
      classes.of[i] = ItemClass::kLarge;
      classes.large.push_back(i);
    } else if (s > delta) {
      classes.of[i] = ItemClass::kMedium;
      classes.medium.push_back(i);
    } else {
      classes.of[i] = ItemClass::kTiny;
      classes.tiny.push_back(i);
    }
  }
  return classes;
}

BinClass classify_bin(std::span<const ItemId> bin, const Instance& instance,
                      const ItemClasses& classes) {
  for (ItemId item : bin) {
    if (classes.of.at(item) == ItemClass::kLarge) return BinClass::kLargeItem;
  }
  return bin_load(instance, bin) < instance.green() ? BinClass::kLight
                                                   : BinClass::kHeavy;
}

PackingStats evaluate(const Instance& instance, const Packing& packing,
                      const Rational& epsilon) {
  check_feasible(instance, packing);
  require_valid_epsilon(epsilon);
  const Rational threshold = large_threshold(instance, epsilon);

  PackingStats stats;
  stats.bins_used = packing.bin_count();
  for (const auto& bin : packing.bins) {
    Rational load = 0;
    bool has_large = false;
    for (ItemId item : bin) {
      load += instance.size(item);
      has_large = has_large || instance.size(item) > threshold;
    }
    if (has_large) {
      ++stats.large_item_bins;
    } else if (load < instance.green()) {
      ++stats.light_bins;
    } else {
      ++stats.heavy_bins;
    }
    stats.energy += instance.energy_of_load(load);
  }
  stats.objective = stats.energy + static_cast<unsigned long>(stats.bins_used);
  return stats;
}

Rational problem_objective(Problem problem, const PackingStats& stats) {
  if (problem == Problem::kCgbp) {
    return Rational(static_cast<unsigned long>(stats.bins_used));
  }
  return stats.objective;
}

}  // namespace greenbp
