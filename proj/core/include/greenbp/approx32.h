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

#ifndef GREENBP_APPROX32_H_
#define GREENBP_APPROX32_H_

#include <optional>
#include <vector>

#include "greenbp/aptas.h"
#include "greenbp/model.h"

namespace greenbp {

// A guess at a two-bin optimum. Here an item is large when s >= 1/3 and tiny
// otherwise; a tiny item is coarse when s > G/4.
struct TwoBinHypothesis {
  std::vector<ItemId> first_large;
  std::vector<ItemId> second_large;
  // Heavy case: a tiny item of size >= G that alone tops up the first bin.
  std::optional<ItemId> seed_tiny;
  // Light case: where the coarse tiny items go, and how many quarters of G
  // of the remaining tiny items each bin receives.
  std::vector<ItemId> first_coarse;
  std::vector<ItemId> second_coarse;
  int first_level = 0;
  int second_level = 0;
};

struct Approx32Options {
  AptasOptions aptas;
};

// Tiny mass >= 4G: both bins of the guessed optimum are heavy. Bin 1 is
// topped up from the seed (or the smallest tiny items until their total
// exceeds max{0, G - S(L1)}), bin 2 from the other tiny items, each until
// its load reaches G; the rest is first-fit, opening bins as needed.
// Returns nullopt when a large side overflows. Throws ContractViolation if
// the tiny mass is below 4G or the hypothesis names items of the wrong kind.
std::optional<Packing> branch_two_bins_heavy(const Instance& instance,
                                             const TwoBinHypothesis& hypothesis);

// Tiny mass < 4G: the coarse tiny items follow the hypothesis, then bin j
// takes the fine tiny items in order while their total stays within
// level_j * G/4 and the bin fits; the remaining fine items share one extra
// bin. Returns nullopt when a bin overflows or the rest does not fit one bin.
std::optional<Packing> branch_two_bins_light_tiny(
    const Instance& instance, const TwoBinHypothesis& hypothesis);

// Streams the single-bin packing (when it fits), the APTAS candidates for
// eps = 1/6 and every two-bin hypothesis candidate (when S <= 2).
void approx32_candidates(const Instance& instance, const PackingSink& sink,
                         const Approx32Options& options = {});

// Best candidate (plus the singleton packing) for the problem. Stops the
// two-bin sweep early once a candidate meets a simple lower bound.
Packing approx32_solve(const Instance& instance, Problem problem,
                       const Approx32Options& options = {});

}  // namespace greenbp

#endif  // GREENBP_APPROX32_H_
