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

#ifndef GREENBP_CONFIGURATIONS_H_
#define GREENBP_CONFIGURATIONS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "greenbp/rational.h"

namespace greenbp {

// Contents of one bin: how many items of each distinct rounded size it holds,
// plus the tiny mass reserved for it, rounded up to tiny_level * delta.
struct BinType {
  std::vector<int> counts;
  int tiny_level = 0;

  friend auto operator<=>(const BinType&, const BinType&) = default;
};

// A multiset of bin types. `bins` lists one entry per bin in canonical order:
// bins holding rounded items first (lexicographically non-increasing counts),
// then tiny-only bins by non-increasing level.
struct Configuration {
  std::vector<BinType> bins;

  std::size_t bin_count() const { return bins.size(); }
  // Distinct bin types with their multiplicities.
  std::vector<std::pair<BinType, std::size_t>> multiplicities() const;
};

// The rounded multiset to cover: distinct sizes (any order) and how many items
// carry each size.
struct RoundedMultiset {
  std::vector<Rational> sizes;
  std::vector<int> counts;
};

// Tiny items to reserve room for. With count == 0 every level is zero and no
// tiny-only bins are produced.
struct TinyReservation {
  Rational delta = 0;
  Rational mass = 0;
  std::size_t count = 0;
};

struct ConfigurationOptions {
  std::size_t max_bins = 0;  // 0: no limit beyond the item count
  std::uint64_t node_budget = 1'000'000;
};

// Streams every configuration whose bins exactly cover the rounded multiset,
// each bin holding total rounded size <= 1, with no duplicates and in a
// deterministic order.
//
// Tiny levels: a bin with rounded content c may take level i when
// (i - 1) * delta < 1 - c and i <= 1/delta. A level vector is kept only if
// some split of the tiny mass could realise it: at most `count` bins have a
// positive level, sum over those bins of (i - 1) * delta < mass, and
// sum of i * delta >= mass.
//
// Throws SearchBudgetExceeded (reporting how many configurations were
// produced) once the search visits more than node_budget nodes. Returns the
// number of configurations visited.
std::uint64_t enumerate_configurations(
    const RoundedMultiset& items, const TinyReservation& tiny,
    const ConfigurationOptions& options,
    const std::function<void(const Configuration&)>& visit);

}  // namespace greenbp

#endif  // GREENBP_CONFIGURATIONS_H_
