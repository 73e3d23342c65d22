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
#include <map>
#include <vector>

#include "absnft/mechanism.hpp"
#include "absnft/money.hpp"

namespace absnft {

// k-leader, one-follower repurchase game. The majority holder N0 trades a
// separate pairwise deal with every minority leader at a single follower
// bid p0; leaders bid first. Closed-form equilibrium plus the coalition
// deviation analysis showing no group of leaders gains by moving off it.

// Minority position of leader i (1-based participant index is positional:
// holdings[0] is N1).
struct LeaderHolding {
  std::int64_t units = 0;
  Valuation value{1};
};

struct BidProfile {
  Bid p0{0};
  std::vector<Bid> leader_bids;
};

struct MultiEquilibrium {
  BidProfile profile;
  HalfUnits u0;                        // follower total across all deals
  std::vector<HalfUnits> leader_utils;
};

// Equilibrium leader bid: v0 when vi <= v0, v0+1 otherwise.
Bid leader_bid_star(Valuation v0, Valuation vi);

// Follower total utility at a bid profile: sum of the pairwise follower
// utilities over all leaders.
HalfUnits follower_total_utility(Bid p0, const std::vector<Bid>& leader_bids,
                                 const std::vector<LeaderHolding>& holdings,
                                 Valuation v0);

// Smallest p0 maximizing the follower total. The total is piecewise linear
// in p0, rising below every leader bid and falling above all of them, so
// scanning the breakpoints {pi-1, pi} is exact; cross-checked against the
// brute-force oracle in tests.
Bid follower_best_response(const std::vector<Bid>& leader_bids,
                           const std::vector<LeaderHolding>& holdings,
                           Valuation v0);

// Equilibrium profile (p0 = v0, leader bids per leader_bid_star) with all
// utilities.
MultiEquilibrium solve_multiplayer_se(Valuation v0,
                                      const std::vector<LeaderHolding>& holdings);

// Sum of coalition members' utilities under a full bid profile. Coalition
// entries are 0-based positions into `holdings`.
HalfUnits coalition_utility(const BidProfile& profile,
                            const std::vector<int>& coalition,
                            const std::vector<LeaderHolding>& holdings,
                            Valuation v0);

struct CollusionCheck {
  bool resisted = false;            // deviating strictly hurt the coalition
  std::vector<int> coalition;       // deviating members (0-based positions)
  Bid follower_response{0};         // best response to the deviated bids
  HalfUnits deviated_utility;       // coalition total after deviating
  HalfUnits equilibrium_utility;    // coalition total on the closed form
};

// Applies a deviation map (position -> bid), recomputes the follower's best
// response, and compares the deviating coalition's total against its
// equilibrium total. Throws EmptyCoalition when no bid actually changes.
CollusionCheck check_collusion_resistance(
    Valuation v0, const std::vector<LeaderHolding>& holdings,
    const std::map<int, Bid>& deviation);

// Upper bound on a coalition's achievable joint surplus with the follower,
// computed exactly as the bound is stated: per-member discount of one half
// unit on losing-value members, not scaled by units. Used only for the
// bound property, never for payoffs.
HalfUnits coalition_bound_cb(const std::vector<int>& coalition,
                             const std::vector<LeaderHolding>& holdings,
                             Valuation v0);

}  // namespace absnft
