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

#include "greenbp/grouping.h"

#include <string>

#include "greenbp/errors.h"
#include "greenbp/model.h"

namespace greenbp {
namespace {

RoundedGroups grouped_by_threshold(std::span<const Rational> sizes,
                                   const Rational& threshold,
                                   const Rational& group_fraction) {
  const Rational count(static_cast<unsigned long>(sizes.size()));
  if (count < threshold) {
    RoundedGroups groups = linear_grouping(sizes, 1);
    groups.below_threshold = true;
    return groups;
  }
  Integer m = ceil_of(group_fraction * count);
  return linear_grouping(sizes, m.get_ui());
}

}  // namespace

RoundedGroups linear_grouping(std::span<const Rational> sizes,
                              std::size_t group_size) {
  if (group_size == 0) throw ContractViolation("group size must be positive");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] > sizes[i - 1]) {
      throw ContractViolation("sizes must be sorted non-increasing (position " +
                              std::to_string(i) + ")");
    }
  }
  RoundedGroups out;
  out.group_size = group_size;
  out.group_of.resize(sizes.size());
  out.mapped_to.resize(sizes.size());
  for (std::size_t start = 0; start < sizes.size(); start += group_size) {
    const std::size_t g = out.groups.size();
    auto& group = out.groups.emplace_back();
    for (std::size_t p = start; p < sizes.size() && p < start + group_size; ++p) {
      group.push_back(p);
      out.group_of[p] = g;
      if (g > 0) out.mapped_to[p] = p - group_size;
    }
    out.rounded_size.push_back(sizes[start]);
  }
  return out;
}

RoundedGroups linear_group_large(std::span<const Rational> sizes,
                                 const Rational& epsilon) {
  require_valid_epsilon(epsilon);
  const Rational eps_sq = epsilon * epsilon;
  return grouped_by_threshold(sizes, 24 / eps_sq, eps_sq / 24);
}

RoundedGroups linear_group_medium(std::span<const Rational> sizes,
                                  const Rational& epsilon,
                                  const Rational& delta) {
  require_valid_epsilon(epsilon);
  if (delta <= 0) throw ContractViolation("delta must be positive");
  const Rational product = epsilon * delta;
  return grouped_by_threshold(sizes, 8 / product, product / 8);
}

}  // namespace greenbp
