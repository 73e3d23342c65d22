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

#include "absnft/multiplayer.hpp"

#include <algorithm>
#include <set>

namespace absnft {

namespace {

void require_instance(const std::vector<Bid>& leader_bids,
                      const std::vector<LeaderHolding>& holdings) {
  if (holdings.empty()) {
    throw Error(Errc::invalid_argument, "no leaders");
  }
  if (leader_bids.size() != holdings.size()) {
    throw Error(Errc::invalid_argument, "bid/holding count mismatch");
  }
  for (const LeaderHolding& h : holdings) {
    if (h.units < 1) {
      throw Error(Errc::invalid_argument, "leader with no units");
    }
  }
}

}  // namespace

Bid leader_bid_star(Valuation v0, Valuation vi) {
  if (vi.v <= v0.v) return Bid(v0.v);
  return Bid(v0.v + 1);
}

HalfUnits follower_total_utility(Bid p0, const std::vector<Bid>& leader_bids,
                                 const std::vector<LeaderHolding>& holdings,
                                 Valuation v0) {
  require_instance(leader_bids, holdings);
  HalfUnits total;
  for (std::size_t i = 0; i < holdings.size(); ++i) {
    total += pairwise_outcome(holdings[i].units, v0, holdings[i].value, p0,
                              leader_bids[i])
                 .u_follower;
  }
  return total;
}

Bid follower_best_response(const std::vector<Bid>& leader_bids,
                           const std::vector<LeaderHolding>& holdings,
                           Valuation v0) {
  require_instance(leader_bids, holdings);
  std::set<int> candidates;
  for (const Bid& b : leader_bids) {
    candidates.insert(b.p);
    if (b.p >= 1) candidates.insert(b.p - 1);
  }
  Bid best = Bid(*candidates.begin());
  HalfUnits best_utility =
      follower_total_utility(best, leader_bids, holdings, v0);
  for (int c : candidates) {
    const Bid bid(c);
    const HalfUnits u = follower_total_utility(bid, leader_bids, holdings, v0);
    if (u > best_utility) {
      best = bid;
      best_utility = u;
    }
  }
  return best;
}

MultiEquilibrium solve_multiplayer_se(
    Valuation v0, const std::vector<LeaderHolding>& holdings) {
  if (holdings.empty()) {
    throw Error(Errc::invalid_argument, "no leaders");
  }
  MultiEquilibrium eq;
  eq.profile.p0 = Bid(v0.v);
  eq.profile.leader_bids.reserve(holdings.size());
  eq.leader_utils.reserve(holdings.size());
  for (const LeaderHolding& h : holdings) {
    const Bid pi = leader_bid_star(v0, h.value);
    eq.profile.leader_bids.push_back(pi);
    const PairwiseOutcome deal =
        pairwise_outcome(h.units, v0, h.value, eq.profile.p0, pi);
    eq.leader_utils.push_back(deal.u_leader);
    eq.u0 += deal.u_follower;
  }
  return eq;
}

HalfUnits coalition_utility(const BidProfile& profile,
                            const std::vector<int>& coalition,
                            const std::vector<LeaderHolding>& holdings,
                            Valuation v0) {
  require_instance(profile.leader_bids, holdings);
  HalfUnits total;
  for (int i : coalition) {
    if (i < 0 || static_cast<std::size_t>(i) >= holdings.size()) {
      throw Error(Errc::invalid_argument,
                  "coalition member " + std::to_string(i) + " out of range");
    }
    total += pairwise_outcome(holdings[i].units, v0, holdings[i].value,
                              profile.p0, profile.leader_bids[i])
                 .u_leader;
  }
  return total;
}

CollusionCheck check_collusion_resistance(
    Valuation v0, const std::vector<LeaderHolding>& holdings,
    const std::map<int, Bid>& deviation) {
  const MultiEquilibrium eq = solve_multiplayer_se(v0, holdings);

  BidProfile deviated = eq.profile;
  CollusionCheck check;
  for (const auto& [i, bid] : deviation) {
    if (i < 0 || static_cast<std::size_t>(i) >= holdings.size()) {
      throw Error(Errc::invalid_argument,
                  "deviator " + std::to_string(i) + " out of range");
    }
    if (bid == eq.profile.leader_bids[i]) continue;
    deviated.leader_bids[i] = bid;
    check.coalition.push_back(i);
  }
  if (check.coalition.empty()) {
    throw Error(Errc::empty_coalition, "no bid differs from the equilibrium");
  }

  deviated.p0 = follower_best_response(deviated.leader_bids, holdings, v0);
  check.follower_response = deviated.p0;
  check.deviated_utility =
      coalition_utility(deviated, check.coalition, holdings, v0);
  check.equilibrium_utility =
      coalition_utility(eq.profile, check.coalition, holdings, v0);
  check.resisted = check.deviated_utility < check.equilibrium_utility;
  return check;
}

HalfUnits coalition_bound_cb(const std::vector<int>& coalition,
                             const std::vector<LeaderHolding>& holdings,
                             Valuation v0) {
  HalfUnits bound;
  for (int i : coalition) {
    if (i < 0 || static_cast<std::size_t>(i) >= holdings.size()) {
      throw Error(Errc::invalid_argument,
                  "coalition member " + std::to_string(i) + " out of range");
    }
    const LeaderHolding& h = holdings[i];
    if (h.value.v <= v0.v) {
      bound += HalfUnits::from_units(h.units * (v0.v - h.value.v));
    } else {
      bound += HalfUnits::from_units(h.units * (h.value.v - v0.v)) -
               HalfUnits::from_halves(1);
    }
  }
  return bound;
}

}  // namespace absnft
