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

#include "greenbp/configurations.h"

#include <algorithm>
#include <map>
#include <string>

#include "greenbp/errors.h"

namespace greenbp {

std::vector<std::pair<BinType, std::size_t>> Configuration::multiplicities()
    const {
  std::map<BinType, std::size_t> counted;
  for (const auto& bin : bins) ++counted[bin];
  return {counted.begin(), counted.end()};
}

namespace {

class ConfigurationSearch {
 public:
  ConfigurationSearch(const RoundedMultiset& items, const TinyReservation& tiny,
                      const ConfigurationOptions& options,
                      const std::function<void(const Configuration&)>& visit)
      : items_(items), tiny_(tiny), options_(options), visit_(visit),
        remaining_(items.counts) {
    if (items.sizes.size() != items.counts.size()) {
      throw ContractViolation("rounded sizes and counts differ in length");
    }
    std::size_t total = 0;
    for (std::size_t j = 0; j < items.sizes.size(); ++j) {
      if (items.sizes[j] <= 0 || items.sizes[j] > 1) {
        throw ContractViolation("rounded size outside (0, 1]");
      }
      if (items.counts[j] < 0) throw ContractViolation("negative count");
      total += static_cast<std::size_t>(items.counts[j]);
    }
    if (tiny.count > 0 && tiny.delta <= 0) {
      throw ContractViolation("tiny reservation needs delta > 0");
    }
    max_bins_ = options.max_bins != 0 ? options.max_bins : total + tiny.count;
    if (tiny.count > 0) {
      level_cap_ = floor_of(1 / tiny.delta).get_si();
    }
  }

  std::uint64_t run() {
    partition();
    return produced_;
  }

 private:
  void tick() {
    if (++nodes_ > options_.node_budget) {
      throw SearchBudgetExceeded(
          "configuration budget of " + std::to_string(options_.node_budget) +
          " nodes exceeded after " + std::to_string(produced_) +
          " configurations");
    }
  }

  // Chooses the next bin content. Contents are generated in lexicographically
  // non-increasing order, which makes each multiset partition appear once.
  void partition() {
    tick();
    const std::size_t d = remaining_.size();
    std::size_t first = 0;
    while (first < d && remaining_[first] == 0) ++first;
    if (first == d) {
      assign_levels();
      return;
    }
    if (parts_.size() >= max_bins_) return;
    bool tight = !parts_.empty();
    if (tight) {
      for (std::size_t j = 0; j < first; ++j) {
        if (parts_.back()[j] != 0) tight = false;
      }
    }
    std::vector<int> part(d, 0);
    choose(first, first, part, Rational(0), tight);
  }

  void choose(std::size_t first, std::size_t j, std::vector<int>& part,
              const Rational& load, bool tight) {
    const std::size_t d = remaining_.size();
    if (j == d) {
      if (part[first] == 0) return;
      for (std::size_t c = 0; c < d; ++c) remaining_[c] -= part[c];
      parts_.push_back(part);
      part_loads_.push_back(load);
      partition();
      parts_.pop_back();
      part_loads_.pop_back();
      for (std::size_t c = 0; c < d; ++c) remaining_[c] += part[c];
      return;
    }
    int hi = remaining_[j];
    if (tight) hi = std::min(hi, parts_.back()[j]);
    const long fit = floor_of((1 - load) / items_.sizes[j]).get_si();
    if (fit < hi) hi = static_cast<int>(fit);
    const int lo = j == first ? 1 : 0;
    for (int c = hi; c >= lo; --c) {
      part[j] = c;
      choose(first, j + 1, part, load + c * items_.sizes[j],
             tight && c == parts_.back()[j]);
    }
    part[j] = 0;
  }

  void assign_levels() {
    levels_.assign(parts_.size(), 0);
    tiny_only_.clear();
    if (tiny_.count == 0) {
      emit();
      return;
    }
    level_caps_.clear();
    for (const Rational& load : part_loads_) {
      long cap = ceil_of((1 - load) / tiny_.delta).get_si();
      level_caps_.push_back(std::min(cap, level_cap_));
    }
    content_levels(0, 0, 0, 0);
  }

  // excess = sum over positive levels of (level - 1).
  bool excess_allowed(long excess) const {
    return Rational(excess) * tiny_.delta < tiny_.mass;
  }

  void content_levels(std::size_t j, std::size_t positive, long excess,
                      long sum) {
    tick();
    if (j == parts_.size()) {
      tiny_only_levels(level_cap_, positive, excess, sum);
      return;
    }
    long hi = level_caps_[j];
    if (j > 0 && parts_[j] == parts_[j - 1]) hi = std::min<long>(hi, levels_[j - 1]);
    for (long level = 0; level <= hi; ++level) {
      if (level > 0 && positive + 1 > tiny_.count) break;
      const long new_excess = excess + std::max(0L, level - 1);
      if (level > 0 && !excess_allowed(new_excess)) break;
      levels_[j] = static_cast<int>(level);
      content_levels(j + 1, positive + (level > 0 ? 1 : 0), new_excess,
                     sum + level);
    }
    levels_[j] = 0;
  }

  void tiny_only_levels(long max_level, std::size_t positive, long excess,
                        long sum) {
    tick();
    if (Rational(sum) * tiny_.delta >= tiny_.mass) emit();
    if (positive >= tiny_.count ||
        parts_.size() + tiny_only_.size() >= max_bins_) {
      return;
    }
    for (long level = 1; level <= max_level; ++level) {
      const long new_excess = excess + level - 1;
      if (!excess_allowed(new_excess)) break;
      tiny_only_.push_back(static_cast<int>(level));
      tiny_only_levels(level, positive + 1, new_excess, sum + level);
      tiny_only_.pop_back();
    }
  }

  void emit() {
    Configuration config;
    config.bins.reserve(parts_.size() + tiny_only_.size());
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      config.bins.push_back(BinType{parts_[j], levels_[j]});
    }
    for (int level : tiny_only_) {
      config.bins.push_back(
          BinType{std::vector<int>(remaining_.size(), 0), level});
    }
    ++produced_;
    visit_(config);
  }

  const RoundedMultiset& items_;
  const TinyReservation& tiny_;
  const ConfigurationOptions& options_;
  const std::function<void(const Configuration&)>& visit_;

  std::vector<int> remaining_;
  std::vector<std::vector<int>> parts_;
  std::vector<Rational> part_loads_;
  std::vector<int> levels_;
  std::vector<long> level_caps_;
  std::vector<int> tiny_only_;
  std::size_t max_bins_ = 0;
  long level_cap_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t produced_ = 0;
};

}  // namespace

std::uint64_t enumerate_configurations(
    const RoundedMultiset& items, const TinyReservation& tiny,
    const ConfigurationOptions& options,
    const std::function<void(const Configuration&)>& visit) {
  ConfigurationSearch search(items, tiny, options, visit);
  return search.run();
}

}  // namespace greenbp
