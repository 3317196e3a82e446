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

#ifndef GREENBP_TINY_ASSIGNMENT_H_
#define GREENBP_TINY_ASSIGNMENT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "greenbp/rational.h"

namespace greenbp {

// Positions below index the `sizes` list handed to assign_tiny_lp.

// A vertex-style solution of the tiny assignment LP: every item either sits
// wholly in one bin or is split across bins.
struct FractionalAssignment {
  std::vector<std::vector<std::size_t>> assigned;  // T_j, one list per bin
  std::vector<std::size_t> split;                  // T_0
};

// Pours the items, in the given order, into bins 0..b-1 up to each bin's cap,
// moving to the next bin when the current one is full. An item that straddles
// a bin boundary is split and lands in T_0, so |T_0| < b. Returns nullopt when
// the caps cannot hold the total size.
std::optional<FractionalAssignment> assign_tiny_lp(
    std::span<const Rational> sizes, std::span<const Rational> caps);

struct TinyRounding {
  std::vector<std::vector<std::size_t>> kept;     // stays in bin j
  std::vector<std::vector<std::size_t>> removed;  // taken out of bin j
  // All removed and split items, sorted by position.
  std::vector<std::size_t> pool;
};

// Per bin: if S(T_j) <= 2 delta every item is removed; otherwise items are
// removed in order until the removed mass first exceeds delta. With items of
// size <= delta this leaves S(kept_j) <= cap_j - delta.
TinyRounding round_tiny(std::span<const Rational> sizes,
                        const FractionalAssignment& assignment,
                        const Rational& delta);

// Packs the items into fresh bins: a bin repeatedly takes the next item (in
// the given order) that keeps its load <= green, and a new bin is opened only
// when no remaining item fits. Returns bins of positions. Throws
// ContractViolation if some item is larger than green.
std::vector<std::vector<std::size_t>> pack_leftovers(
    std::span<const Rational> sizes, std::span<const std::size_t> pool,
    const Rational& green);

}  // namespace greenbp

#endif  // GREENBP_TINY_ASSIGNMENT_H_
