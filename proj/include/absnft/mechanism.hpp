// Copyright 2026 The absnft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "absnft/money.hpp"

namespace absnft {

// One pairwise repurchase deal between the majority holder N0 (the
// "follower", who bids second) and a minority holder Ni (a "leader").
//
//   - p0 >= pi: N0 buys Ni's units at the midpoint (p0+pi)/2 per unit.
//   - p0 <= pi-1: the repurchase fails and Ni buys the same number of units
//     from N0; Ni pays the midpoint but N0 only receives (p0+pi-1)/2 per
//     unit. The half-unit gap is the failed-trade discount.

enum class TradeDirection {
  follower_buys,  // N0 acquires the leader's units
  leader_buys,    // Ni acquires units from N0 at a discounted seller price
};

struct PairwiseOutcome {
  TradeDirection direction;
  HalfUnits unit_price;           // what the buyer pays per unit
  HalfUnits seller_unit_revenue;  // what the seller receives per unit
  HalfUnits u_follower;           // N0's utility over all traded units
  HalfUnits u_leader;             // Ni's utility over all traded units
};

// Exact utilities of one deal over `units` units. Total on valid inputs.
PairwiseOutcome pairwise_outcome(std::int64_t units, Valuation v0,
                                 Valuation vi, Bid p0, Bid pi);

// u_follower + u_leader in closed form: units*(v0-vi) on a successful
// repurchase, units*(vi-v0) minus units/2 (the per-unit discount summed over
// all units) on a failed one. Matches pairwise_outcome identically; kept as
// a second algebraic route for cross-checking.
HalfUnits utility_sum(std::int64_t units, Valuation v0, Valuation vi, Bid p0,
                      Bid pi);

// max over (p0, pi) of utility_sum for fixed values.
HalfUnits utility_sum_max(std::int64_t units, Valuation v0, Valuation vi);

}  // namespace absnft
