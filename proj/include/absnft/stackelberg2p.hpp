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

#include "absnft/mechanism.hpp"
#include "absnft/money.hpp"

namespace absnft {

// Single-round two-player repurchase game. N1, the minority holder, leads
// with bid p1; N0, the majority holder who triggered the repurchase,
// follows with p0. Closed-form best responses and the resulting
// equilibrium; every formula here is cross-checked against the brute-force
// oracle in tests.

struct EquilibriumProfile2P {
  Bid p0;
  Bid p1;
  HalfUnits u0;
  HalfUnits u1;

  friend bool operator==(const EquilibriumProfile2P&,
                         const EquilibriumProfile2P&) = default;
};

// N0's stage-II utility for a bid pair (p0 fixed by the caller).
HalfUnits follower_utility(Bid p0, Bid p1, Valuation v0, std::int64_t m1);

// N1's stage-I utility for a bid pair.
HalfUnits leader_utility(Bid p0, Bid p1, Valuation v1, std::int64_t m1);

// Stage-II best response of N0: match p1 while it is at most v0, undercut
// by one otherwise.
Bid best_response_follower(Bid p1, Valuation v0);

// Stage-I optimum of N1 against the anticipated best response: v0 when
// v1 <= v0, v0+1 otherwise.
Bid optimal_leader_bid(Valuation v0, Valuation v1);

// The unique Stackelberg equilibrium of the single round; utilities are
// exact half-unit totals over m1 units. The follower's utility is 0 in
// every instance.
EquilibriumProfile2P solve_se(Valuation v0, Valuation v1, std::int64_t m1);

}  // namespace absnft
