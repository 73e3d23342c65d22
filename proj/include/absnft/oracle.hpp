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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absnft/money.hpp"
#include "absnft/repeated.hpp"

namespace absnft {

// Independent brute-force verifier. Nothing in this module reuses a closed
// form from the solver modules: every check enumerates bids (or strategy
// tables) directly, which is what makes it usable as ground truth against
// them. All scans are deterministic; witnesses are the lexicographically
// smallest failure found.

// Upper limit for exhaustive bid scans. Utilities are monotone moving away
// from the optimum beyond every relevant value, so max value + 2 suffices.
struct BidBound {
  explicit BidBound(int bound) : limit(bound) {
    if (bound < 0) {
      throw Error(Errc::invalid_argument, "negative bid bound");
    }
  }
  int limit;
};

inline BidBound default_bid_bound(int max_value) {
  return BidBound(max_value + 2);
}

// Full argmax set of a utility over bids [0..B], ascending. Works for any
// totally ordered exact utility (half-units, rationals).
template <class Utility>
std::vector<Bid> brute_best_response(Utility&& utility, BidBound bound) {
  std::vector<Bid> argmax;
  auto best = utility(Bid(0));
  argmax.push_back(Bid(0));
  for (int p = 1; p <= bound.limit; ++p) {
    const Bid bid(p);
    const auto value = utility(bid);
    if (value > best) {
      best = value;
      argmax.clear();
      argmax.push_back(bid);
    } else if (value == best) {
      argmax.push_back(bid);
    }
  }
  return argmax;
}

struct NashDeviation {
  int player = 0;
  Bid from{0};
  Bid to{0};
  HalfUnits utility_before;
  HalfUnits utility_after;
};

struct NashCheck {
  bool is_nash = false;
  std::optional<NashDeviation> witness;  // set iff !is_nash
};

// No unilateral bid change within [0..B] strictly improves any player.
// utilities[j] evaluates player j at a full bid profile.
NashCheck verify_nash(
    const std::vector<Bid>& profile,
    const std::vector<std::function<HalfUnits(const std::vector<Bid>&)>>&
        utilities,
    BidBound bound);

// Utility at (p0, leader bids); used for both seats of the two-stage check.
using ProfileUtility =
    std::function<HalfUnits(Bid p0, const std::vector<Bid>& leader_bids)>;

struct StackelbergCheck {
  bool is_equilibrium = false;
  // Failure details, meaningful iff !is_equilibrium. player -1 means the
  // follower was not best-responding; otherwise the leader index improves
  // by deviating to `deviation` (with the follower re-best-responding).
  int player = 0;
  Bid deviation{0};
  HalfUnits utility_before;
  HalfUnits utility_after;
  std::string reason;
};

// Two-stage check: the follower bid must lie in the brute-force argmax set
// given the leader bids, and no leader may gain by any bid in [0..B] once
// the follower re-best-responds (smallest argmax on ties).
StackelbergCheck verify_stackelberg(
    const std::vector<Bid>& leader_bids, Bid follower_bid,
    const ProfileUtility& follower_utility,
    const std::vector<ProfileUtility>& leader_utilities, BidBound bound);

// One player's replacement bid table over non-terminal share splits,
// indexed by that player's possible m0 (1..M-1); entry s is the bid played
// whenever the game reaches m0 == s+1, in either seat.
struct DeviationWitness {
  int player = 0;
  std::vector<Bid> bid_table;
  HalfUnits baseline_utility;
  HalfUnits improved_utility;
};

// Exhaustive search over per-state bid tables for either player against the
// fixed opposing baseline, horizon-capped. Returns the first (smallest)
// strictly improving deviation, or nullopt: a bounded-horizon equilibrium
// certificate for the baseline pair. Guarded: M <= 9, horizon <= 12,
// B <= 8, else SearchSpaceTooLarge.
std::optional<DeviationWitness> bounded_deviation_search(
    Valuation v0, Valuation v1, std::int64_t M, std::int64_t initial_m0,
    const Strategy& baseline0, const Strategy& baseline1, int horizon,
    BidBound bound);

}  // namespace absnft
