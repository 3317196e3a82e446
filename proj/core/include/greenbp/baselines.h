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

#ifndef GREENBP_BASELINES_H_
#define GREENBP_BASELINES_H_

#include "greenbp/model.h"
#include "greenbp/rational.h"

namespace greenbp {

// Order in which the online-style heuristics consume items.
enum class ItemOrder {
  kCanonical,  // non-increasing size, ties by original position
  kOriginal,   // the caller's original order
};

// Puts each item into the most recently opened bin, or opens a new one.
Packing next_fit(const Instance& instance,
                 ItemOrder order = ItemOrder::kCanonical);

// Puts each item into the earliest opened bin with room, or opens a new one.
Packing first_fit(const Instance& instance,
                  ItemOrder order = ItemOrder::kCanonical);

// First fit over the items sorted by non-increasing size.
Packing ffd(const Instance& instance);

// Items of size >= G + tau get a bin of their own; the rest are packed by
// next fit against an effective capacity of G + tau. Throws ContractViolation
// unless 0 <= tau <= 1 - G.
Packing threshold_next_fit(const Instance& instance, const Rational& tau);

}  // namespace greenbp

#endif  // GREENBP_BASELINES_H_
