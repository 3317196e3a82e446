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

#ifndef GREENBP_APTAS_H_
#define GREENBP_APTAS_H_

#include <cstdint>
#include <functional>
#include <span>

#include "greenbp/model.h"
#include "greenbp/rational.h"

namespace greenbp {

struct AptasOptions {
  // Node budget of each configuration search.
  std::uint64_t configuration_budget = 1'000'000;
};

using PackingSink = std::function<void(Packing)>;

// Same items with sizes and green space divided by `factor` and beta
// multiplied by it, so energy(beta, G, x) equals the scaled energy of
// x / factor for every load x. The budget is carried over unchanged. Throws
// ContractViolation if factor <= 0 or a scaled size exceeds 1.
Instance scale_instance(const Instance& instance, const Rational& factor);

// The listed items (canonical ids, ascending) as an instance of their own
// without a budget. Item k of the result is items[k].
Instance sub_instance(const Instance& instance, std::span<const ItemId> items);

// Candidates for G >= eps/3: group and round the large and medium items,
// enumerate bin configurations with tiny levels, assign the tiny items through
// the fractional assignment and its rounding, and pack the leftovers into
// fresh bins. Throws ContractViolation if G < eps/3 and SearchBudgetExceeded
// when the configuration search runs out of nodes.
void aptas_pipeline_a(const Instance& instance, const Rational& epsilon,
                      const PackingSink& sink, const AptasOptions& options = {});

// Candidates for G < eps/3 (delta = G), from three branches:
//  - items larger than G alone, the rest solved by pipeline A after scaling
//    by 2G;
//  - every large-item configuration and heavy-bin count h: h fresh bins get
//    one medium item each, or tiny items until the load exceeds G, and the
//    remaining items are first-fit;
//  - every large-item configuration, medium items alone, and each tiny-item
//    packing on the Pareto front of pipeline A after scaling by 3G with
//    eps / 2.
void aptas_pipeline_b(const Instance& instance, const Rational& epsilon,
                      const PackingSink& sink, const AptasOptions& options = {});

// Pipeline A or B depending on whether G >= eps/3.
void aptas_candidates(const Instance& instance, const Rational& epsilon,
                      const PackingSink& sink, const AptasOptions& options = {});

// Best of the candidates and the singleton packing: least bins + energy for
// GBP, least bins within the instance budget for CGBP (then least energy).
Packing aptas_solve(const Instance& instance, const Rational& epsilon,
                    Problem problem, const AptasOptions& options = {});

}  // namespace greenbp

#endif  // GREENBP_APTAS_H_
