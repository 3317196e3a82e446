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

#include "greenbp/model.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "greenbp/errors.h"
#include "support/brute_force.h"
#include "support/random.h"

namespace greenbp {
namespace {

Rational q(const char* text) { return parse_rational(text); }

TEST(Energy, MatchesDefinitionOnExamples) {
  EXPECT_EQ(energy(0, q("0.3"), q("0.9")), 0);
  EXPECT_EQ(energy(2, q("1/2"), q("3/4")), q("1/2"));
  EXPECT_EQ(energy(5, q("0.8"), q("0.6")), 0);
}

TEST(Energy, RejectsOutOfRangeArguments) {
  EXPECT_THROW(energy(1, q("0.5"), q("1.01")), ContractViolation);
  EXPECT_THROW(energy(1, q("0.5"), q("-0.01")), ContractViolation);
  EXPECT_THROW(energy(-1, q("0.5"), q("0.5")), ContractViolation);
  EXPECT_THROW(energy(1, q("1.5"), q("0.5")), ContractViolation);
}

TEST(Energy, NonDecreasingInLoad) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Rational beta = testing::grid_value(rng, 0, 50, 7);
    const Rational green = testing::grid_value(rng, 0, 60, 60);
    Rational a = testing::grid_value(rng, 0, 97, 97);
    Rational b = testing::grid_value(rng, 0, 97, 97);
    if (a > b) std::swap(a, b);
    EXPECT_LE(energy(beta, green, a), energy(beta, green, b));
  }
}

TEST(Instance, SortsSizesAndKeepsOriginalPositions) {
  Instance inst({q("0.2"), q("0.5"), q("0.2"), q("0.9")}, 1, q("0.5"));
  ASSERT_EQ(inst.item_count(), 4u);
  EXPECT_EQ(inst.size(0), q("0.9"));
  EXPECT_EQ(inst.size(1), q("0.5"));
  EXPECT_EQ(inst.original_index(0), 3u);
  EXPECT_EQ(inst.original_index(1), 1u);
  // Equal sizes keep their original relative order.
  EXPECT_EQ(inst.original_index(2), 0u);
  EXPECT_EQ(inst.original_index(3), 2u);
  EXPECT_EQ(inst.total_size(), q("1.8"));
  EXPECT_EQ(inst.singleton_energy(), q("0.4"));
}

TEST(Instance, RejectsInvalidParameters) {
  EXPECT_THROW(Instance({q("1.5")}, 1, q("0.5")), ContractViolation);
  EXPECT_THROW(Instance({q("0")}, 1, q("0.5")), ContractViolation);
  EXPECT_THROW(Instance({q("0.5")}, -1, q("0.5")), ContractViolation);
  EXPECT_THROW(Instance({q("0.5")}, 1, q("1.1")), ContractViolation);
  EXPECT_THROW(Instance({q("0.5")}, 1, q("0.5"), q("-1")), ContractViolation);
}

TEST(Instance, BudgetBelowSingletonEnergyIsInfeasible) {
  EXPECT_THROW(Instance({q("0.9")}, 1, q("0.5"), q("0.1")), InfeasibleBudget);
  Instance tight({q("0.9")}, 1, q("0.5"), q("0.4"));
  EXPECT_EQ(*tight.budget(), q("0.4"));
}

TEST(ClassifyItems, ThresholdsFollowSizes) {
  Instance inst({q("0.6"), q("0.2"), q("0.01")}, 1, q("0.5"));
  const ItemClasses classes = classify_items(inst, 1, q("1/39"));
  EXPECT_EQ(classes.large, std::vector<ItemId>{0});
  EXPECT_EQ(classes.medium, std::vector<ItemId>{1});
  EXPECT_EQ(classes.tiny, std::vector<ItemId>{2});
  EXPECT_EQ(classes.large_threshold, q("0.5"));
}

TEST(ClassifyItems, SizeEqualToThresholdIsMedium) {
  Instance inst({q("0.3"), q("1/3")}, 1, q("0.1"));
  const ItemClasses classes = classify_items(inst, 1, q("0.1"));
  EXPECT_TRUE(classes.large.empty());
  EXPECT_EQ(classes.medium.size(), 2u);
}

TEST(ClassifyItems, EmptyInstanceAndZeroDelta) {
  Instance empty({}, 1, q("0.5"));
  const ItemClasses none = classify_items(empty, 1, q("1/39"));
  EXPECT_TRUE(none.large.empty() && none.medium.empty() && none.tiny.empty());

  Instance zero_green({q("0.5"), q("0.1")}, 1, 0);
  const ItemClasses classes = classify_items(zero_green, 1, 0);
  EXPECT_TRUE(classes.tiny.empty());
  EXPECT_EQ(classes.large.size() + classes.medium.size(), 2u);
}

TEST(ClassifyItems, RejectsBadEpsilonOrDelta) {
  Instance inst({q("0.5")}, 1, q("0.1"));
  EXPECT_THROW(classify_items(inst, q("2/3"), q("0.01")), ContractViolation);
  EXPECT_THROW(classify_items(inst, 0, q("0.01")), ContractViolation);
  EXPECT_THROW(classify_items(inst, 2, q("0.01")), ContractViolation);
  EXPECT_THROW(classify_items(inst, 1, q("0.34")), ContractViolation);
  EXPECT_THROW(classify_items(inst, 1, q("-0.1")), ContractViolation);
}

TEST(ClassifyBin, LargeHeavyLight) {
  Instance inst({q("0.6"), q("0.3"), q("0.3"), q("0.2")}, 1, q("0.5"));
  const ItemClasses classes = classify_items(inst, 1, q("1/39"));
  EXPECT_EQ(classify_bin(std::vector<ItemId>{0}, inst, classes),
            BinClass::kLargeItem);
  EXPECT_EQ(classify_bin(std::vector<ItemId>{3}, inst, classes),
            BinClass::kLight);
  EXPECT_EQ(classify_bin(std::vector<ItemId>{1, 2}, inst, classes),
            BinClass::kHeavy);
}

TEST(Evaluate, CountsBinsEnergyAndClasses) {
  Instance one({q("0.4")}, 1, q("0.5"));
  const PackingStats light = evaluate(one, Packing{{{0}}});
  EXPECT_EQ(light.bins_used, 1u);
  EXPECT_EQ(light.light_bins, 1u);
  EXPECT_EQ(light.energy, 0);
  EXPECT_EQ(light.objective, 1);

  Instance two({q("3/8"), q("3/8"), q("3/8"), q("3/8")}, 2, q("1/2"));
  const PackingStats heavy = evaluate(two, Packing{{{0, 1}, {2, 3}}});
  EXPECT_EQ(heavy.energy, 1);
  EXPECT_EQ(heavy.objective, 3);
  EXPECT_EQ(heavy.heavy_bins, 2u);
  EXPECT_EQ(heavy.bins_used,
            heavy.large_item_bins + heavy.heavy_bins + heavy.light_bins);
}

TEST(Evaluate, ReportsInfeasiblePackings) {
  Instance inst({q("0.7"), q("0.7")}, 1, q("0.5"));
  try {
    evaluate(inst, Packing{{{0, 1}}});
    FAIL() << "overfull bin accepted";
  } catch (const FeasibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("overfull"), std::string::npos);
  }
  try {
    evaluate(inst, Packing{{{0}, {0}, {1}}});
    FAIL() << "duplicate accepted";
  } catch (const FeasibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("covered twice"), std::string::npos);
  }
  EXPECT_THROW(evaluate(inst, Packing{{{0}}}), FeasibilityError);
  EXPECT_THROW(evaluate(inst, Packing{{{0}, {}, {1}}}), FeasibilityError);
  EXPECT_THROW(evaluate(inst, Packing{{{0}, {5}}}), FeasibilityError);
}

TEST(Evaluate, InvariantUnderBinAndItemReordering) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::uniform_count(rng, 1, 9);
    Instance inst(testing::grid_values(rng, n, 1, 40, 100),
                  testing::grid_value(rng, 0, 30, 4),
                  testing::grid_value(rng, 0, 10, 10));
    // Next-fit style packing in canonical order.
    Packing packing;
    Rational load = 2;
    for (ItemId item = 0; item < n; ++item) {
      if (load + inst.size(item) > 1) {
        packing.bins.emplace_back();
        load = 0;
      }
      packing.bins.back().push_back(item);
      load += inst.size(item);
    }
    const PackingStats stats = evaluate(inst, packing);
    Packing shuffled = packing;
    std::shuffle(shuffled.bins.begin(), shuffled.bins.end(), rng);
    for (auto& bin : shuffled.bins) std::shuffle(bin.begin(), bin.end(), rng);
    EXPECT_EQ(evaluate(inst, shuffled), stats);
    EXPECT_EQ(canonical_form(shuffled), canonical_form(packing));
  }
}

TEST(SingletonPacking, AttainsLeastEnergy) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = testing::uniform_count(rng, 1, 8);
    Instance inst(testing::grid_values(rng, n, 1, 60, 60),
                  testing::grid_value(rng, 0, 20, 3),
                  testing::grid_value(rng, 0, 12, 12));
    const PackingStats singleton = evaluate(inst, singleton_packing(inst));
    EXPECT_EQ(singleton.energy, inst.singleton_energy());
    Rational least = singleton.energy;
    testing::for_each_set_partition(n, [&](const auto& bins) {
      Rational e = 0;
      for (const auto& bin : bins) {
        const Rational load = bin_load(inst, bin);
        if (load > 1) return;
        e += inst.energy_of_load(load);
      }
      least = std::min(least, e);
    });
    EXPECT_EQ(least, singleton.energy);
  }
}

TEST(Energy, ZeroBetaOrFullGreenSpaceReducesToBinPacking) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Rational x = testing::grid_value(rng, 0, 1000, 1000);
    EXPECT_EQ(energy(0, testing::grid_value(rng, 0, 100, 100), x), 0);
    EXPECT_EQ(energy(testing::grid_value(rng, 0, 1000, 7), 1, x), 0);
  }
}

TEST(Energy, ScalingIdentityOnDoubleGreenSpace) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    const Rational green = testing::grid_value(rng, 1, 50, 100);
    const Rational beta = testing::grid_value(rng, 0, 100, 9);
    const Rational x = testing::grid_value(rng, 0, 1000, 1000) * 2 * green;
    EXPECT_EQ(energy(beta, green, x),
              energy(2 * green * beta, Rational(1, 2), x / (2 * green)));
  }
}

TEST(Problem, NamesRoundTrip) {
  EXPECT_EQ(parse_problem(to_string(Problem::kGbp)), Problem::kGbp);
  EXPECT_EQ(parse_problem(to_string(Problem::kCgbp)), Problem::kCgbp);
  EXPECT_THROW(parse_problem("bp"), ContractViolation);
}

}  // namespace
}  // namespace greenbp
