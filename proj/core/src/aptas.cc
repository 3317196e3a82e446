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

#include "greenbp/aptas.h"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "greenbp/candidate_pool.h"
#include "greenbp/configurations.h"
#include "greenbp/errors.h"
#include "greenbp/grouping.h"
#include "greenbp/tiny_assignment.h"

namespace greenbp {
namespace {

// Rounded items merged by equal rounded size, largest size first.
struct RoundedItems {
  RoundedMultiset multiset;
  std::vector<std::vector<ItemId>> members;  // item ids per distinct size
};

RoundedItems merge_rounded(std::vector<std::pair<ItemId, Rational>> items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  RoundedItems result;
  for (auto& [item, size] : items) {
    if (result.multiset.sizes.empty() || result.multiset.sizes.back() != size) {
      result.multiset.sizes.push_back(size);
      result.multiset.counts.push_back(0);
      result.members.emplace_back();
    }
    ++result.multiset.counts.back();
    result.members.back().push_back(item);
  }
  return result;
}

std::vector<Rational> sizes_of(const Instance& instance,
                               std::span<const ItemId> items) {
  std::vector<Rational> sizes;
  sizes.reserve(items.size());
  for (ItemId item : items) sizes.push_back(instance.size(item));
  return sizes;
}

void add_grouped(std::vector<std::pair<ItemId, Rational>>& out,
                 std::span<const ItemId> items, const RoundedGroups& groups) {
  for (std::size_t p = 0; p < items.size(); ++p) {
    out.emplace_back(items[p], groups.rounded(p));
  }
}

// Bins of item ids for the rounded part of a configuration, in bin order.
std::vector<std::vector<ItemId>> place_rounded(const Configuration& config,
                                               const RoundedItems& rounded) {
  std::vector<std::size_t> cursor(rounded.members.size(), 0);
  std::vector<std::vector<ItemId>> bins(config.bin_count());
  for (std::size_t j = 0; j < config.bin_count(); ++j) {
    const auto& counts = config.bins[j].counts;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      for (int k = 0; k < counts[c]; ++k) {
        bins[j].push_back(rounded.members[c][cursor[c]++]);
      }
    }
  }
  return bins;
}

Packing map_packing(const Packing& packing, std::span<const ItemId> ids) {
  Packing mapped;
  mapped.bins.reserve(packing.bins.size());
  for (const auto& bin : packing.bins) {
    auto& out = mapped.bins.emplace_back();
    out.reserve(bin.size());
    for (ItemId item : bin) out.push_back(ids[item]);
  }
  return mapped;
}

}  // namespace

Instance scale_instance(const Instance& instance, const Rational& factor) {
  if (factor <= 0) throw ContractViolation("scaling factor must be positive");
  std::vector<Rational> sizes;
  sizes.reserve(instance.item_count());
  for (const Rational& s : instance.sizes()) {
    Rational scaled = s / factor;
    if (scaled > 1) {
      throw ContractViolation("scaled size " + to_fraction_string(scaled) +
                              " exceeds 1");
    }
    sizes.push_back(std::move(scaled));
  }
  return Instance(std::move(sizes), instance.beta() * factor,
                  instance.green() / factor, instance.budget());
}

Instance sub_instance(const Instance& instance, std::span<const ItemId> items) {
  for (std::size_t k = 1; k < items.size(); ++k) {
    if (items[k] <= items[k - 1]) {
      throw ContractViolation("sub-instance items must be ascending");
    }
  }
  if (!items.empty() && items.back() >= instance.item_count()) {
    throw ContractViolation("sub-instance item out of range");
  }
  return Instance(sizes_of(instance, items), instance.beta(),
                  instance.green());
}

void aptas_pipeline_a(const Instance& instance, const Rational& epsilon,
                      const PackingSink& sink, const AptasOptions& options) {
  require_valid_epsilon(epsilon);
  if (3 * instance.green() < epsilon) {
    throw ContractViolation("pipeline A needs G >= eps/3");
  }
  if (instance.empty()) return;

  const Rational delta = epsilon * epsilon / 39;
  const ItemClasses classes = classify_items(instance, epsilon, delta);

  std::vector<std::pair<ItemId, Rational>> rounded_items;
  add_grouped(rounded_items, classes.large,
              linear_group_large(sizes_of(instance, classes.large), epsilon));
  add_grouped(rounded_items, classes.medium,
              linear_group_medium(sizes_of(instance, classes.medium), epsilon,
                                  delta));
  const RoundedItems rounded = merge_rounded(std::move(rounded_items));

  const std::vector<Rational> tiny_sizes = sizes_of(instance, classes.tiny);
  TinyReservation tiny;
  tiny.delta = delta;
  tiny.count = tiny_sizes.size();
  for (const Rational& s : tiny_sizes) tiny.mass += s;

  ConfigurationOptions config_options;
  config_options.max_bins = 2 * instance.item_count();
  config_options.node_budget = options.configuration_budget;

  std::vector<Rational> caps;
  enumerate_configurations(
      rounded.multiset, tiny, config_options, [&](const Configuration& config) {
        Packing packing;
        packing.bins = place_rounded(config, rounded);
        caps.clear();
        for (const BinType& type : config.bins) {
          caps.push_back(type.tiny_level * delta);
        }
        const auto assignment = assign_tiny_lp(tiny_sizes, caps);
        if (!assignment) return;
        const TinyRounding rounding = round_tiny(tiny_sizes, *assignment, delta);
        for (std::size_t j = 0; j < rounding.kept.size(); ++j) {
          for (std::size_t p : rounding.kept[j]) {
            packing.bins[j].push_back(classes.tiny[p]);
          }
        }
        for (const auto& bin :
             pack_leftovers(tiny_sizes, rounding.pool, instance.green())) {
          auto& out = packing.bins.emplace_back();
          for (std::size_t p : bin) out.push_back(classes.tiny[p]);
        }
        sink(std::move(packing));
      });
}

void aptas_pipeline_b(const Instance& instance, const Rational& epsilon,
                      const PackingSink& sink, const AptasOptions& options) {
  require_valid_epsilon(epsilon);
  const Rational& green = instance.green();
  if (3 * green >= epsilon) {
    throw ContractViolation("pipeline B needs G < eps/3");
  }
  if (instance.empty()) return;

  const ItemClasses classes = classify_items(instance, epsilon, green);
  const std::vector<ItemId>& tiny = classes.tiny;
  std::vector<ItemId> big = classes.large;
  big.insert(big.end(), classes.medium.begin(), classes.medium.end());
  std::sort(big.begin(), big.end());

  // Items larger than G alone; tiny items through pipeline A scaled by 2G.
  if (tiny.empty()) {
    sink(singleton_packing(instance));
  } else {
    const Instance scaled = scale_instance(sub_instance(instance, tiny), 2 * green);
    aptas_pipeline_a(scaled, epsilon, [&](Packing packing) {
      Packing full = map_packing(packing, tiny);
      for (ItemId item : big) full.bins.push_back({item});
      sink(std::move(full));
    }, options);
  }

  // Tiny-item packings for the small-tiny-mass branch, scaled by 3G.
  std::vector<Packing> tiny_front;
  if (!tiny.empty()) {
    const Instance scaled = scale_instance(sub_instance(instance, tiny), 3 * green);
    CandidatePool pool(scaled);
    aptas_pipeline_a(scaled, epsilon / 2,
                     [&](Packing packing) { pool.offer(std::move(packing)); },
                     options);
    pool.offer(singleton_packing(scaled));
    for (const Candidate& c : pool.front()) {
      tiny_front.push_back(map_packing(c.packing, tiny));
    }
  }

  std::vector<ItemId> medium_by_original = classes.medium;
  std::sort(medium_by_original.begin(), medium_by_original.end(),
            [&](ItemId a, ItemId b) {
              return instance.original_index(a) < instance.original_index(b);
            });

  std::vector<std::pair<ItemId, Rational>> rounded_items;
  add_grouped(rounded_items, classes.large,
              linear_group_large(sizes_of(instance, classes.large), epsilon));
  const RoundedItems rounded = merge_rounded(std::move(rounded_items));

  ConfigurationOptions config_options;
  config_options.max_bins = 2 * instance.item_count();
  config_options.node_budget = options.configuration_budget;

  const std::size_t max_heavy =
      std::min(2 * instance.item_count(), classes.medium.size() + tiny.size());

  enumerate_configurations(
      rounded.multiset, TinyReservation{}, config_options,
      [&](const Configuration& config) {
        const std::vector<std::vector<ItemId>> large_bins =
            place_rounded(config, rounded);

        for (std::size_t heavy = 0; heavy <= max_heavy; ++heavy) {
          std::vector<std::vector<ItemId>> bins = large_bins;
          std::vector<Rational> loads;
          for (const auto& bin : bins) {
            loads.push_back(bin_load(instance, bin));
          }
          std::vector<char> used(instance.item_count(), 0);
          const std::size_t seeded = std::min(heavy, classes.medium.size());
          for (std::size_t k = 0; k < seeded; ++k) {
            const ItemId item = medium_by_original[k];
            bins.push_back({item});
            loads.push_back(instance.size(item));
            used[item] = 1;
          }
          std::size_t next_tiny = 0;
          for (std::size_t k = seeded; k < heavy && next_tiny < tiny.size();
               ++k) {
            std::vector<ItemId> bin;
            Rational load = 0;
            while (load <= green && next_tiny < tiny.size()) {
              const ItemId item = tiny[next_tiny++];
              bin.push_back(item);
              load += instance.size(item);
              used[item] = 1;
            }
            bins.push_back(std::move(bin));
            loads.push_back(std::move(load));
          }
          // First fit of whatever is left, largest first.
          for (ItemId item = 0; item < instance.item_count(); ++item) {
            if (used[item] || classes.of[item] == ItemClass::kLarge) continue;
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
          sink(Packing{std::move(bins)});
        }

        std::vector<std::vector<ItemId>> base = large_bins;
        for (ItemId item : classes.medium) base.push_back({item});
        if (tiny_front.empty()) {
          sink(Packing{std::move(base)});
          return;
        }
        for (const Packing& tiny_packing : tiny_front) {
          Packing full{base};
          full.bins.insert(full.bins.end(), tiny_packing.bins.begin(),
                           tiny_packing.bins.end());
          sink(std::move(full));
        }
      });
}

void aptas_candidates(const Instance& instance, const Rational& epsilon,
                      const PackingSink& sink, const AptasOptions& options) {
  require_valid_epsilon(epsilon);
  if (3 * instance.green() >= epsilon) {
    aptas_pipeline_a(instance, epsilon, sink, options);
  } else {
    aptas_pipeline_b(instance, epsilon, sink, options);
  }
}

Packing aptas_solve(const Instance& instance, const Rational& epsilon,
                    Problem problem, const AptasOptions& options) {
  CandidatePool pool(instance);
  pool.offer(singleton_packing(instance));
  aptas_candidates(instance, epsilon,
                   [&](Packing packing) { pool.offer(std::move(packing)); },
                   options);
  return pool.best(problem)->packing;
}

}  // namespace greenbp
