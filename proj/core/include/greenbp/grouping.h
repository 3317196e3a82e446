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

#ifndef GREENBP_GROUPING_H_
#define GREENBP_GROUPING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "greenbp/rational.h"

namespace greenbp {

// Result of linear grouping over a list of sizes sorted non-increasing.
// Positions refer to that input list.
struct RoundedGroups {
  // Consecutive runs of positions; every group but the last has exactly
  // group_size members.
  std::vector<std::vector<std::size_t>> groups;
  std::size_t group_size = 1;
  // Largest (first) size of each group; every member is rounded up to it.
  std::vector<Rational> rounded_size;
  // Group index of each position.
  std::vector<std::size_t> group_of;
  // For positions in group i >= 1: the position with the same rank in group
  // i - 1, whose size is at least as large. Empty for group 0.
  std::vector<std::optional<std::size_t>> mapped_to;
  // True when the input was below the grouping threshold and left unrounded.
  bool below_threshold = false;

  std::size_t group_count() const { return groups.size(); }
  const Rational& rounded(std::size_t position) const {
    return rounded_size[group_of[position]];
  }
};

// Groups of `group_size` consecutive items, each rounded up to its group's
// largest size. Throws ContractViolation if the sizes are not sorted
// non-increasing or group_size is zero.
RoundedGroups linear_grouping(std::span<const Rational> sizes,
                              std::size_t group_size);

// Large items: group size ceil(eps^2 |L| / 24) once |L| >= 24 / eps^2,
// singleton groups (no rounding) below that.
RoundedGroups linear_group_large(std::span<const Rational> sizes,
                                 const Rational& epsilon);

// Medium items: group size ceil(eps * delta * |M| / 8) once
// |M| >= 8 / (eps * delta), singleton groups below that.
RoundedGroups linear_group_medium(std::span<const Rational> sizes,
                                  const Rational& epsilon,
                                  const Rational& delta);

}  // namespace greenbp

#endif  // GREENBP_GROUPING_H_
