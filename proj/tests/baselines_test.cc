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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "greenbp/errors.h"
#include "support/brute_force.h"
#include "support/random.h"

namespace greenbp {
namespace {

Rational q(const char* text) { return parse_rational(text); }

// Bin contents as sorted lists of sizes, bins in packing order.
std::vector<std::vector<Rational>> contents(const Instance& inst,
                                            const Packing& packing) {
  std::vector<std::vector<Rational>> out;
  for (const auto& bin : packing.bins) {
    auto& sizes = out.emplace_back();
    for (ItemId item : bin) sizes.push_back(inst.size(item));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
  }
  return out;
}

Instance make(std::vector<Rational> sizes) {
  return Instance(std::move(sizes), 1, q("0.5"));
}

TEST(NextFit, ClosesTheActiveBinWhenFull) {
  const Instance inst = make({q("0.6"), q("0.6"), q("0.3")});
  const auto bins = contents(inst, next_fit(inst, ItemOrder::kOriginal));
  EXPECT_EQ(bins, (std::vector<std::vector<Rational>>{{q("0.6")},
                                                      {q("0.6"), q("0.3")}}));
}

TEST(NextFit, OriginalOrderNeverReturnsToOldBins) {
  const Instance inst = make({q("0.6"), q("0.5"), q("0.3")});
  const auto bins = contents(inst, next_fit(inst, ItemOrder::kOriginal));
  EXPECT_EQ(bins, (std::vector<std::vector<Rational>>{{q("0.6")},
                                                      {q("0.5"), q("0.3")}}));
  const Instance reordered = make({q("0.3"), q("0.6"), q("0.5")});
  EXPECT_EQ(next_fit(reordered, ItemOrder::kOriginal).bin_count(), 2u);
}

TEST(NextFit, SingleAndUnitItems) {
  EXPECT_EQ(next_fit(make({q("0.4")})).bin_count(), 1u);
  EXPECT_EQ(next_fit(make({1, 1, 1})).bin_count(), 3u);
}

TEST(FirstFit, ReturnsToEarlierBins) {
  const Instance inst = make({q("0.6"), q("0.3"), q("0.6")});
  const auto bins = contents(inst, first_fit(inst, ItemOrder::kOriginal));
  EXPECT_EQ(bins, (std::vector<std::vector<Rational>>{{q("0.6"), q("0.3")},
                                                      {q("0.6")}}));
  const Instance small = make({q("0.3"), q("0.8"), q("0.6")});
  const auto again = contents(small, first_fit(small, ItemOrder::kOriginal));
  EXPECT_EQ(again, (std::vector<std::vector<Rational>>{{q("0.6"), q("0.3")},
                                                       {q("0.8")}}));
}

TEST(FirstFit, EmptyAndPairs) {
  EXPECT_EQ(first_fit(make({})).bin_count(), 0u);
  EXPECT_EQ(first_fit(make({q("0.5"), q("0.5")})).bin_count(), 1u);
}

TEST(Ffd, SortsBeforeFirstFit) {
  const Instance a = make({q("0.3"), q("0.5"), q("0.2"), q("0.4")});
  EXPECT_EQ(contents(a, ffd(a)),
            (std::vector<std::vector<Rational>>{{q("0.5"), q("0.4")},
                                                {q("0.3"), q("0.2")}}));
  const Instance b = make({q("0.3"), q("0.7"), q("0.3"), q("0.7")});
  EXPECT_EQ(contents(b, ffd(b)),
            (std::vector<std::vector<Rational>>{{q("0.7"), q("0.3")},
                                                {q("0.7"), q("0.3")}}));
  EXPECT_EQ(ffd(make({q("0.9")})).bin_count(), 1u);
}

TEST(ThresholdNextFit, IsolatesLargeItemsAndCapsTheRest) {
  const Instance inst = make({q("0.8"), q("0.3"), q("0.3"), q("0.3")});
  const auto bins = contents(inst, threshold_next_fit(inst, q("0.2")));
  EXPECT_EQ(bins, (std::vector<std::vector<Rational>>{
                      {q("0.8")}, {q("0.3"), q("0.3")}, {q("0.3")}}));
}

TEST(ThresholdNextFit, AllItemsAboveThreshold) {
  const Instance inst = make({q("0.8"), q("0.75"), q("0.9")});
  EXPECT_EQ(threshold_next_fit(inst, q("0.2")).bin_count(), 3u);
}

TEST(ThresholdNextFit, RejectsTauOutOfRange) {
  const Instance inst = make({q("0.5")});
  EXPECT_THROW(threshold_next_fit(inst, q("-0.1")), ContractViolation);
  EXPECT_THROW(threshold_next_fit(inst, q("0.6")), ContractViolation);
}

TEST(Baselines, FeasibleAndWithinClassicBounds) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::uniform_count(rng, 0, 10);
    const auto sizes = testing::grid_values(rng, n, 1, 100, 100);
    const Rational green = testing::grid_value(rng, 0, 10, 10);
    const Instance inst(sizes, 0, green);
    const Rational tau = testing::grid_value(rng, 0, 10, 10) * (1 - green);
    for (ItemOrder order : {ItemOrder::kCanonical, ItemOrder::kOriginal}) {
      const Packing nf = next_fit(inst, order);
      evaluate(inst, nf);
      EXPECT_LE(nf.bin_count(), 2 * ceil_of(inst.total_size()).get_ui());
      evaluate(inst, first_fit(inst, order));
    }
    evaluate(inst, threshold_next_fit(inst, tau));
    EXPECT_EQ(canonical_form(threshold_next_fit(inst, 1 - green)),
              canonical_form(next_fit(inst)));
    const std::size_t optimum = testing::classic_bin_packing_optimum(sizes);
    EXPECT_LE(2 * ffd(inst).bin_count(), 3 * optimum);
  }
}

}  // namespace
}  // namespace greenbp
