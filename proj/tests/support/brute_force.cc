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

#include "support/brute_force.h"

#include <limits>

namespace greenbp::testing {
namespace {

void extend(std::size_t item, std::size_t n,
            std::vector<std::vector<ItemId>>& bins,
            const std::function<void(const std::vector<std::vector<ItemId>>&)>&
                visit) {
  if (item == n) {
    visit(bins);
    return;
  }
  for (std::size_t b = 0; b < bins.size(); ++b) {
    bins[b].push_back(item);
    extend(item + 1, n, bins, visit);
    bins[b].pop_back();
  }
  bins.push_back({item});
  extend(item + 1, n, bins, visit);
  bins.pop_back();
}

// Calls visit(bins, energy) for every feasible partition.
void for_each_feasible(
    const Instance& instance,
    const std::function<void(std::size_t, const Rational&)>& visit) {
  for_each_set_partition(
      instance.item_count(), [&](const std::vector<std::vector<ItemId>>& bins) {
        Rational energy = 0;
        for (const auto& bin : bins) {
          Rational load = 0;
          for (ItemId item : bin) load += instance.size(item);
          if (load > 1) return;
          energy += instance.energy_of_load(load);
        }
        visit(bins.size(), energy);
      });
}

}  // namespace

void for_each_set_partition(
    std::size_t n,
    const std::function<void(const std::vector<std::vector<ItemId>>&)>& visit) {
  std::vector<std::vector<ItemId>> bins;
  extend(0, n, bins, visit);
}

BruteForceOptimum brute_force_gbp(const Instance& instance) {
  std::optional<BruteForceOptimum> best;
  for_each_feasible(instance, [&](std::size_t bins, const Rational& energy) {
    Rational objective = energy + static_cast<unsigned long>(bins);
    if (!best || objective < best->objective ||
        (objective == best->objective && energy < best->energy)) {
      best = BruteForceOptimum{bins, energy, objective};
    }
  });
  return best.value_or(BruteForceOptimum{});
}

std::optional<BruteForceOptimum> brute_force_cgbp(const Instance& instance,
                                                  const Rational& budget) {
  if (instance.empty()) return BruteForceOptimum{};
  std::optional<BruteForceOptimum> best;
  for_each_feasible(instance, [&](std::size_t bins, const Rational& energy) {
    if (energy > budget) return;
    if (!best || bins < best->bins ||
        (bins == best->bins && energy < best->energy)) {
      best = BruteForceOptimum{bins, energy,
                               Rational(energy + static_cast<unsigned long>(bins))};
    }
  });
  return best;
}

std::size_t classic_bin_packing_optimum(std::span<const Rational> sizes) {
  const std::size_t n = sizes.size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<char> fits(full + 1, 0);
  for (std::size_t mask = 0; mask <= full; ++mask) {
    Rational load = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) load += sizes[i];
    }
    fits[mask] = load <= 1;
  }
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(full + 1, kInf);
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    // Every bin choice must contain the lowest remaining item.
    for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !fits[sub] || best[mask ^ sub] == kInf) continue;
      best[mask] = std::min(best[mask], best[mask ^ sub] + 1);
    }
  }
  return best[full];
}

}  // namespace greenbp::testing
