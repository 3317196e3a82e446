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

#include "greenbp/baselines.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "greenbp/errors.h"

namespace greenbp {
namespace {

std::vector<ItemId> item_sequence(const Instance& instance, ItemOrder order) {
  std::vector<ItemId> items(instance.item_count());
  std::iota(items.begin(), items.end(), ItemId{0});
  if (order == ItemOrder::kOriginal) {
    std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) {
      return instance.original_index(a) < instance.original_index(b);
    });
  }
  return items;
}

Packing next_fit_with_capacity(const Instance& instance,
                               const std::vector<ItemId>& items,
                               const Rational& capacity, Packing packing) {
  const std::size_t first_new_bin = packing.bins.size();
  Rational active_load = 0;
  for (ItemId item : items) {
    const Rational& s = instance.size(item);
    if (packing.bins.size() > first_new_bin && active_load + s <= capacity) {
      packing.bins.back().push_back(item);
      active_load += s;
    } else {
      packing.bins.push_back({item});
      active_load = s;
    }
  }
  return packing;
}

}  // namespace

Packing next_fit(const Instance& instance, ItemOrder order) {
  return next_fit_with_capacity(instance, item_sequence(instance, order), 1,
                                Packing{});
}

Packing first_fit(const Instance& instance, ItemOrder order) {
  Packing packing;
  std::vector<Rational> loads;
  for (ItemId item : item_sequence(instance, order)) {
    const Rational& s = instance.size(item);
    std::size_t b = 0;
    while (b < loads.size() && loads[b] + s > 1) ++b;
    if (b == loads.size()) {
      loads.push_back(0);
      packing.bins.emplace_back();
    }
    loads[b] += s;
    packing.bins[b].push_back(item);
  }
  return packing;
}

Packing ffd(const Instance& instance) {
  // Canonical order is already non-increasing with ties by original index.
  return first_fit(instance, ItemOrder::kCanonical);
}

Packing threshold_next_fit(const Instance& instance, const Rational& tau) {
  if (tau < 0 || tau > 1 - instance.green()) {
    throw ContractViolation("tau " + to_fraction_string(tau) +
                            " outside [0, 1 - G]");
  }
  const Rational capacity = instance.green() + tau;
  Packing packing;
  std::vector<ItemId> rest;
  for (ItemId item = 0; item < instance.item_count(); ++item) {
    if (instance.size(item) >= capacity) {
      packing.bins.push_back({item});
    } else {
      rest.push_back(item);
    }
  }
  return next_fit_with_capacity(instance, rest, capacity, std::move(packing));
}

}  // namespace greenbp
