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

#include "greenbp/approx32.h"

#include <algorithm>
#include <utility>

#include "greenbp/candidate_pool.h"
#include "greenbp/errors.h"

namespace greenbp {
namespace {

const Rational kOneThird(1, 3);
constexpr int kMaxLevel = 16;

bool is_large(const Instance& instance, ItemId item) {
  return instance.size(item) >= kOneThird;
}

std::vector<ItemId> tiny_items(const Instance& instance) {
  std::vector<ItemId> tiny;
  for (ItemId item = 0; item < instance.item_count(); ++item) {
    if (!is_large(instance, item)) tiny.push_back(item);
  }
  return tiny;
}

Rational total_of(const Instance& instance, const std::vector<ItemId>& items) {
  Rational total = 0;
  for (ItemId item : items) total += instance.size(item);
  return total;
}

void check_large_split(const Instance& instance, const TwoBinHypothesis& hyp) {
  std::vector<char> seen(instance.item_count(), 0);
  for (const auto* side : {&hyp.first_large, &hyp.second_large}) {
    for (ItemId item : *side) {
      if (item >= instance.item_count() || !is_large(instance, item) ||
          seen[item]) {
        throw ContractViolation("hypothesis large split is not a partition");
      }
      seen[item] = 1;
    }
  }
  for (ItemId item = 0; item < instance.item_count(); ++item) {
    if (is_large(instance, item) && !seen[item]) {
      throw ContractViolation("hypothesis large split misses an item");
    }
  }
}

// First fit of `items` (largest first) into `bins`, opening new bins.
void first_fit_into(const Instance& instance, std::vector<ItemId> items,
                    std::vector<std::vector<ItemId>>& bins,
                    std::vector<Rational>& loads) {
  std::sort(items.begin(), items.end());
  for (ItemId item : items) {
    const Rational& s = instance.size(item);
    std::size_t target = 0;
    while (target < bins.size() && loads[target] + s > 1) ++target;
    if (target == bins.size()) {
      bins.emplace_back();
      loads.emplace_back(0);
    }
    bins[target].push_back(item);
    loads[target] += s;
  }
}

Packing without_empty_bins(std::vector<std::vector<ItemId>> bins) {
  std::erase_if(bins, [](const auto& bin) { return bin.empty(); });
  return Packing{std::move(bins)};
}

// Least objective any packing can reach: b >= ceil(S) bins and energy at
// least both the singleton energy and beta * (S - b G).
Rational gbp_lower_bound(const Instance& instance) {
  const Rational& total = instance.total_size();
  const std::size_t first =
      std::max<std::size_t>(1, ceil_of(total).get_ui());
  std::optional<Rational> best;
  for (std::size_t b = first; b <= instance.item_count(); ++b) {
    Rational energy_floor =
        instance.beta() * (total - static_cast<unsigned long>(b) * instance.green());
    if (energy_floor < instance.singleton_energy()) {
      energy_floor = instance.singleton_energy();
    }
    Rational value = energy_floor + static_cast<unsigned long>(b);
    if (!best || value < *best) best = value;
  }
  return best.value_or(Rational(0));
}

// Fewest bins any packing within budget U can use.
std::size_t cgbp_lower_bound(const Instance& instance, const Rational& budget) {
  const Rational& total = instance.total_size();
  std::size_t b = std::max<std::size_t>(1, ceil_of(total).get_ui());
  while (b < instance.item_count() &&
         instance.beta() *
                 (total - static_cast<unsigned long>(b) * instance.green()) >
             budget) {
    ++b;
  }
  return b;
}

// Streams the cheap candidates and the two-bin hypotheses; `offer` returns
// false to stop early. Returns false if stopped.
bool two_bin_sweep(const Instance& instance,
                   const std::function<bool(Packing)>& offer) {
  const std::size_t n = instance.item_count();
  if (!offer(singleton_packing(instance))) return false;
  if (instance.total_size() <= 1) {
    std::vector<ItemId> all(n);
    for (ItemId item = 0; item < n; ++item) all[item] = item;
    if (!offer(Packing{{all}})) return false;
  }
  if (instance.total_size() > 2 || n < 2) return true;

  std::vector<ItemId> large;
  for (ItemId item = 0; item < n; ++item) {
    if (is_large(instance, item)) large.push_back(item);
  }
  const std::vector<ItemId> tiny = tiny_items(instance);
  const Rational tiny_mass = total_of(instance, tiny);
  const Rational& green = instance.green();
  const bool heavy_case = tiny_mass >= 4 * green;

  std::vector<ItemId> coarse;
  std::vector<ItemId> fine;
  for (ItemId item : tiny) {
    (4 * instance.size(item) > green ? coarse : fine).push_back(item);
  }
  const Rational fine_mass = total_of(instance, fine);

  for (unsigned mask = 0; mask < (1u << large.size()); ++mask) {
    TwoBinHypothesis hyp;
    for (std::size_t k = 0; k < large.size(); ++k) {
      ((mask >> k) & 1u ? hyp.first_large : hyp.second_large)
          .push_back(large[k]);
    }
    const Rational first_mass = total_of(instance, hyp.first_large);
    const Rational second_mass = total_of(instance, hyp.second_large);
    if (first_mass > 1 || second_mass > 1) continue;

    // At most one tiny item in the second bin.
    for (std::size_t pick = 0; pick <= tiny.size(); ++pick) {
      std::vector<ItemId> first = hyp.first_large;
      std::vector<ItemId> second = hyp.second_large;
      for (std::size_t k = 0; k < tiny.size(); ++k) {
        (k == pick ? second : first).push_back(tiny[k]);
      }
      if (total_of(instance, first) > 1 || total_of(instance, second) > 1) {
        continue;
      }
      if (!offer(without_empty_bins({first, second}))) return false;
    }

    if (heavy_case) {
      if (first_mass < second_mass) continue;
      if (auto packing = branch_two_bins_heavy(instance, hyp)) {
        if (!offer(std::move(*packing))) return false;
      }
      for (ItemId item : tiny) {
        if (instance.size(item) < green) continue;
        hyp.seed_tiny = item;
        if (auto packing = branch_two_bins_heavy(instance, hyp)) {
          if (!offer(std::move(*packing))) return false;
        }
      }
      continue;
    }

    for (unsigned split = 0; split < (1u << coarse.size()); ++split) {
      hyp.first_coarse.clear();
      hyp.second_coarse.clear();
      for (std::size_t k = 0; k < coarse.size(); ++k) {
        ((split >> k) & 1u ? hyp.first_coarse : hyp.second_coarse)
            .push_back(coarse[k]);
      }
      if (first_mass + total_of(instance, hyp.first_coarse) > 1 ||
          second_mass + total_of(instance, hyp.second_coarse) > 1) {
        continue;
      }
      const int top = fine.empty() ? 0 : kMaxLevel;
      for (int k1 = 0; k1 <= top; ++k1) {
        for (int k2 = 0; k2 <= top; ++k2) {
          if ((k1 + k2) * green > 4 * fine_mass + 2 * green) continue;
          hyp.first_level = k1;
          hyp.second_level = k2;
          if (auto packing = branch_two_bins_light_tiny(instance, hyp)) {
            if (!offer(std::move(*packing))) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Packing> branch_two_bins_heavy(
    const Instance& instance, const TwoBinHypothesis& hypothesis) {
  check_large_split(instance, hypothesis);
  const std::vector<ItemId> tiny = tiny_items(instance);
  const Rational& green = instance.green();
  if (total_of(instance, tiny) < 4 * green) {
    throw ContractViolation("heavy two-bin branch needs tiny mass >= 4G");
  }
  std::vector<std::vector<ItemId>> bins = {hypothesis.first_large,
                                           hypothesis.second_large};
  std::vector<Rational> loads = {total_of(instance, bins[0]),
                                 total_of(instance, bins[1])};
  if (loads[0] > 1 || loads[1] > 1) return std::nullopt;

  std::vector<char> in_first(instance.item_count(), 0);
  if (hypothesis.seed_tiny) {
    const ItemId seed = *hypothesis.seed_tiny;
    if (seed >= instance.item_count() || is_large(instance, seed)) {
      throw ContractViolation("seed item is not tiny");
    }
    in_first[seed] = 1;
  } else {
    Rational threshold = green - loads[0];
    if (threshold < 0) threshold = 0;
    Rational taken = 0;
    for (auto it = tiny.rbegin(); it != tiny.rend() && taken <= threshold;
         ++it) {
      in_first[*it] = 1;
      taken += instance.size(*it);
    }
  }

  std::vector<ItemId> leftover;
  for (int j = 0; j < 2; ++j) {
    for (ItemId item : tiny) {
      if (static_cast<bool>(in_first[item]) != (j == 0)) continue;
      const Rational& s = instance.size(item);
      if (loads[j] < green && loads[j] + s <= 1) {
        bins[j].push_back(item);
        loads[j] += s;
      } else {
        leftover.push_back(item);
      }
    }
  }
  first_fit_into(instance, std::move(leftover), bins, loads);
  return without_empty_bins(std::move(bins));
}

std::optional<Packing> branch_two_bins_light_tiny(
    const Instance& instance, const TwoBinHypothesis& hypothesis) {
  check_large_split(instance, hypothesis);
  const std::vector<ItemId> tiny = tiny_items(instance);
  const Rational& green = instance.green();
  if (total_of(instance, tiny) >= 4 * green) {
    throw ContractViolation("light two-bin branch needs tiny mass < 4G");
  }
  if (hypothesis.first_level < 0 || hypothesis.first_level > kMaxLevel ||
      hypothesis.second_level < 0 || hypothesis.second_level > kMaxLevel) {
    throw ContractViolation("tiny level outside 0..16");
  }

  std::vector<char> coarse_seen(instance.item_count(), 0);
  for (const auto* side : {&hypothesis.first_coarse, &hypothesis.second_coarse}) {
    for (ItemId item : *side) {
      if (item >= instance.item_count() || is_large(instance, item) ||
          4 * instance.size(item) <= green || coarse_seen[item]) {
        throw ContractViolation("hypothesis coarse split is not a partition");
      }
      coarse_seen[item] = 1;
    }
  }
  std::vector<ItemId> fine;
  for (ItemId item : tiny) {
    if (4 * instance.size(item) <= green) {
      fine.push_back(item);
    } else if (!coarse_seen[item]) {
      throw ContractViolation("hypothesis coarse split misses an item");
    }
  }

  std::vector<std::vector<ItemId>> bins = {hypothesis.first_large,
                                           hypothesis.second_large};
  bins[0].insert(bins[0].end(), hypothesis.first_coarse.begin(),
                 hypothesis.first_coarse.end());
  bins[1].insert(bins[1].end(), hypothesis.second_coarse.begin(),
                 hypothesis.second_coarse.end());
  std::vector<Rational> loads = {total_of(instance, bins[0]),
                                 total_of(instance, bins[1])};
  if (loads[0] > 1 || loads[1] > 1) return std::nullopt;

  std::size_t next = 0;
  const int levels[2] = {hypothesis.first_level, hypothesis.second_level};
  for (int j = 0; j < 2; ++j) {
    const Rational cap = Rational(levels[j]) * green / 4;
    Rational packed = 0;
    while (next < fine.size()) {
      const Rational& s = instance.size(fine[next]);
      if (packed + s > cap || loads[j] + s > 1) break;
      bins[j].push_back(fine[next++]);
      packed += s;
      loads[j] += s;
    }
  }
  if (next < fine.size()) {
    std::vector<ItemId> rest(fine.begin() + next, fine.end());
    if (total_of(instance, rest) > 1) return std::nullopt;
    bins.push_back(std::move(rest));
  }
  return without_empty_bins(std::move(bins));
}

void approx32_candidates(const Instance& instance, const PackingSink& sink,
                         const Approx32Options& options) {
  two_bin_sweep(instance, [&](Packing packing) {
    sink(std::move(packing));
    return true;
  });
  aptas_candidates(instance, Rational(1, 6), sink, options.aptas);
}

Packing approx32_solve(const Instance& instance, Problem problem,
                       const Approx32Options& options) {
  CandidatePool pool(instance);
  if (problem == Problem::kCgbp && !instance.budget()) {
    throw ContractViolation("CGBP needs an instance budget U");
  }
  std::function<bool()> reached;
  if (problem == Problem::kGbp) {
    const Rational bound = gbp_lower_bound(instance);
    reached = [&pool, bound] {
      const auto best = pool.best_gbp();
      return best && best->energy + static_cast<unsigned long>(best->bins) <= bound;
    };
  } else {
    const Rational& budget = *instance.budget();
    const std::size_t bound = cgbp_lower_bound(instance, budget);
    reached = [&pool, &budget, bound] {
      const auto best = pool.best_cgbp(budget);
      return best && best->bins <= bound;
    };
  }
  const bool finished = two_bin_sweep(instance, [&](Packing packing) {
    pool.offer(std::move(packing));
    return !reached();
  });
  if (finished) {
    aptas_candidates(instance, Rational(1, 6),
                     [&](Packing packing) { pool.offer(std::move(packing)); },
                     options.aptas);
  }
  return pool.best(problem)->packing;
}

}  // namespace greenbp
