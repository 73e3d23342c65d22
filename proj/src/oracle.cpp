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

#include "absnft/oracle.hpp"

#include <algorithm>

namespace absnft {

NashCheck verify_nash(
    const std::vector<Bid>& profile,
    const std::vector<std::function<HalfUnits(const std::vector<Bid>&)>>&
        utilities,
    BidBound bound) {
  if (profile.size() != utilities.size()) {
    throw Error(Errc::invalid_argument, "profile/utility count mismatch");
  }
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const HalfUnits before = utilities[j](profile);
    std::vector<Bid> trial = profile;
    for (int p = 0; p <= bound.limit; ++p) {
      if (p == profile[j].p) continue;
      trial[j] = Bid(p);
      const HalfUnits after = utilities[j](trial);
      if (after > before) {
        return NashCheck{
            false,
            NashDeviation{static_cast<int>(j), profile[j], Bid(p), before,
                          after}};
      }
    }
    trial[j] = profile[j];
  }
  return NashCheck{true, std::nullopt};
}

namespace {

// Advances an odometer in lexicographic order, first entry most
// significant. False once every entry has passed `limit`.
bool advance_table(std::vector<int>& table, int limit) {
  for (std::size_t i = table.size(); i-- > 0;) {
    if (table[i] < limit) {
      ++table[i];
      std::fill(table.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                table.end(), 0);
      return true;
    }
  }
  return false;
}

// Smallest maximizer of the follower utility given fixed leader bids.
Bid rebest_response(const ProfileUtility& follower_utility,
                    const std::vector<Bid>& leader_bids, BidBound bound) {
  Bid best(0);
  HalfUnits best_u = follower_utility(best, leader_bids);
  for (int p = 1; p <= bound.limit; ++p) {
    const HalfUnits u = follower_utility(Bid(p), leader_bids);
    if (u > best_u) {
      best = Bid(p);
      best_u = u;
    }
  }
  return best;
}

}  // namespace

StackelbergCheck verify_stackelberg(
    const std::vector<Bid>& leader_bids, Bid follower_bid,
    const ProfileUtility& follower_utility,
    const std::vector<ProfileUtility>& leader_utilities, BidBound bound) {
  if (leader_bids.size() != leader_utilities.size()) {
    throw Error(Errc::invalid_argument, "bid/utility count mismatch");
  }

  StackelbergCheck check;

  // Stage II: the follower bid must be a true best response (any member of
  // the argmax set qualifies; discrete ties are legitimate).
  const std::vector<Bid> follower_argmax = brute_best_response(
      [&](Bid p0) { return follower_utility(p0, leader_bids); }, bound);
  if (std::find(follower_argmax.begin(), follower_argmax.end(),
                follower_bid) == follower_argmax.end()) {
    check.is_equilibrium = false;
    check.player = -1;
    check.deviation = follower_argmax.front();
    check.utility_before = follower_utility(follower_bid, leader_bids);
    check.utility_after = follower_utility(follower_argmax.front(),
                                           leader_bids);
    check.reason = "follower bid not a best response";
    return check;
  }

  // Stage I: each leader, anticipating the follower's re-best-response.
  for (std::size_t i = 0; i < leader_bids.size(); ++i) {
    const HalfUnits before = leader_utilities[i](follower_bid, leader_bids);
    std::vector<Bid> trial = leader_bids;
    for (int p = 0; p <= bound.limit; ++p) {
      if (p == leader_bids[i].p) continue;
      trial[i] = Bid(p);
      const Bid p0 = rebest_response(follower_utility, trial, bound);
      const HalfUnits after = leader_utilities[i](p0, trial);
      if (after > before) {
        check.is_equilibrium = false;
        check.player = static_cast<int>(i);
        check.deviation = Bid(p);
        check.utility_before = before;
        check.utility_after = after;
        check.reason = "leader improves by deviating";
        return check;
      }
    }
  }

  check.is_equilibrium = true;
  return check;
}

std::optional<DeviationWitness> bounded_deviation_search(
    Valuation v0, Valuation v1, std::int64_t M, std::int64_t initial_m0,
    const Strategy& baseline0, const Strategy& baseline1, int horizon,
    BidBound bound) {
  if (M > 9 || horizon > 12 || bound.limit > 8) {
    throw Error(Errc::search_space_too_large,
                "guard is M <= 9, horizon <= 12, bound <= 8");
  }
  if (M < 3 || M % 2 == 0) {
    throw Error(Errc::invalid_argument, "M must be odd and >= 3");
  }

  const std::size_t num_states = static_cast<std::size_t>(M - 1);
  for (int player = 0; player <= 1; ++player) {
    const Strategy& own_baseline = player == 0 ? baseline0 : baseline1;
    const Strategy& opponent = player == 0 ? baseline1 : baseline0;

    const GameTrace base =
        player == 0
            ? simulate(v0, v1, M, initial_m0, own_baseline, opponent, horizon)
            : simulate(v0, v1, M, initial_m0, opponent, own_baseline,
                       horizon);
    const HalfUnits baseline_u = player == 0 ? base.total_u0 : base.total_u1;

    // Every bid table over non-terminal splits, in lexicographic order;
    // table[s] is the deviator's bid whenever the game reaches m0 == s+1.
    // The first witness found is therefore the smallest.
    std::vector<int> table(num_states, 0);
    do {
      Strategy deviation = [&table](const RepeatedState& state, Role,
                                    std::optional<Bid>) {
        return Bid(table[static_cast<std::size_t>(state.m0 - 1)]);
      };
      const GameTrace run =
          player == 0
              ? simulate(v0, v1, M, initial_m0, deviation, opponent, horizon)
              : simulate(v0, v1, M, initial_m0, opponent, deviation, horizon);
      const HalfUnits u = player == 0 ? run.total_u0 : run.total_u1;
      if (u > baseline_u) {
        DeviationWitness witness;
        witness.player = player;
        witness.bid_table.reserve(num_states);
        for (int b : table) witness.bid_table.push_back(Bid(b));
        witness.baseline_utility = baseline_u;
        witness.improved_utility = u;
        return witness;
      }
    } while (advance_table(table, bound.limit));
  }
  return std::nullopt;
}

}  // namespace absnft
