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

#include "greenbp/tiny_assignment.h"

#include <algorithm>

#include "greenbp/errors.h"

namespace greenbp {

std::optional<FractionalAssignment> assign_tiny_lp(
    std::span<const Rational> sizes, std::span<const Rational> caps) {
  FractionalAssignment result;
  result.assigned.resize(caps.size());
  for (const Rational& cap : caps) {
    if (cap < 0) throw ContractViolation("negative tiny cap");
  }
  std::size_t bin = 0;
  Rational room = caps.empty() ? Rational(0) : caps[0];
  for (std::size_t item = 0; item < sizes.size(); ++item) {
    // Skip bins that are already exactly full.
    while (room == 0 && bin + 1 < caps.size()) room = caps[++bin];
    if (bin >= caps.size()) return std::nullopt;
    if (sizes[item] <= room) {
      result.assigned[bin].push_back(item);
      room -= sizes[item];
      continue;
    }
    Rational rest = sizes[item] - room;
    ++bin;
    while (bin < caps.size() && rest > caps[bin]) {
      rest -= caps[bin];
      ++bin;
    }
    if (bin >= caps.size()) return std::nullopt;
    room = caps[bin] - rest;
    result.split.push_back(item);
  }
  return result;
}

TinyRounding round_tiny(std::span<const Rational> sizes,
                        const FractionalAssignment& assignment,
                        const Rational& delta) {
  TinyRounding result;
  const std::size_t bins = assignment.assigned.size();
  result.kept.resize(bins);
  result.removed.resize(bins);
  result.pool = assignment.split;
  for (std::size_t j = 0; j < bins; ++j) {
    const auto& items = assignment.assigned[j];
    Rational total = 0;
    for (std::size_t item : items) total += sizes[item];
    std::size_t cut = items.size();
    if (total > 2 * delta) {
      Rational taken = 0;
      cut = 0;
      while (taken <= delta) taken += sizes[items[cut++]];
    }
    result.removed[j].assign(items.begin(), items.begin() + cut);
    result.kept[j].assign(items.begin() + cut, items.end());
    result.pool.insert(result.pool.end(), result.removed[j].begin(),
                       result.removed[j].end());
  }
  std::sort(result.pool.begin(), result.pool.end());
  return result;
}

std::vector<std::vector<std::size_t>> pack_leftovers(
    std::span<const Rational> sizes, std::span<const std::size_t> pool,
    const Rational& green) {
  for (std::size_t item : pool) {
    if (sizes[item] > green) {
      throw ContractViolation("leftover item larger than the green space");
    }
  }
  std::vector<std::size_t> remaining(pool.begin(), pool.end());
  std::vector<std::vector<std::size_t>> bins;
  while (!remaining.empty()) {
    std::vector<std::size_t> bin;
    std::vector<std::size_t> rest;
    Rational load = 0;
    for (std::size_t item : remaining) {
      if (load + sizes[item] <= green) {
        load += sizes[item];
        bin.push_back(item);
      } else {
        rest.push_back(item);
      }
    }
    bins.push_back(std::move(bin));
    remaining = std::move(rest);
  }
  return bins;
}

}  // namespace greenbp
