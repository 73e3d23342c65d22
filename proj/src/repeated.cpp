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

#include "absnft/repeated.hpp"

#include <algorithm>
#include <utility>

namespace absnft {

RepeatedState make_state(std::int64_t m0, std::int64_t m1, int round) {
  if (m0 <= 0 || m1 <= 0) {
    throw Error(Errc::invalid_argument, "holdings must be positive");
  }
  if ((m0 + m1) % 2 == 0) {
    throw Error(Errc::invalid_argument,
                "total share count must be odd, got " +
                    std::to_string(m0 + m1));
  }
  if (m0 == m1) {
    throw Error(Errc::equal_holdings, "m0 == m1 == " + std::to_string(m0));
  }
  if (round < 1) {
    throw Error(Errc::invalid_argument, "round index must be >= 1");
  }
  return RepeatedState{m0, m1, round};
}

int leader_of(const RepeatedState& state) {
  if (state.m0 == state.m1) {
    throw Error(Errc::equal_holdings,
                "no majority at m0 == m1 == " + std::to_string(state.m0));
  }
  return state.m0 > state.m1 ? 1 : 0;
}

RoundResult play_round(const RepeatedState& state, Valuation v0, Valuation v1,
                       Bid leader_bid, Bid follower_bid) {
  const int leader = leader_of(state);
  const int follower = 1 - leader;
  const std::int64_t minority = std::min(state.m0, state.m1);

  RoundRecord rec;
  rec.round = state.round;
  rec.m0_before = state.m0;
  rec.m1_before = state.m1;
  rec.leader = leader;
  rec.p0 = leader == 0 ? leader_bid : follower_bid;
  rec.p1 = leader == 1 ? leader_bid : follower_bid;
  rec.units_moved = minority;

  // One pairwise deal with the majority holder in the buyer-triggering
  // seat: follower buys exactly when its bid matches or beats the
  // leader's, otherwise the trade flips with the discounted seller price.
  const PairwiseOutcome deal = pairwise_outcome(
      minority, follower == 0 ? v0 : v1, leader == 0 ? v0 : v1, follower_bid,
      leader_bid);
  rec.unit_price = deal.unit_price;
  rec.seller_unit_revenue = deal.seller_unit_revenue;
  rec.u0 = follower == 0 ? deal.u_follower : deal.u_leader;
  rec.u1 = follower == 1 ? deal.u_follower : deal.u_leader;

  RoundResult result;
  if (deal.direction == TradeDirection::follower_buys) {
    // Follower buys out the leader; game ends with one sole holder.
    rec.buyer = follower;
    result.terminal = follower == 0 ? TerminalKind::z0 : TerminalKind::z1;
  } else {
    // Failed repurchase: the leader buys the same number of units from the
    // follower and the minority stake doubles.
    rec.buyer = leader;
    const std::int64_t next_minority = 2 * minority;
    const std::int64_t m0 =
        leader == 0 ? next_minority : state.total() - next_minority;
    result.next = RepeatedState{m0, state.total() - m0, state.round + 1};
    result.terminal = TerminalKind::none;
  }

  result.record = rec;
  return result;
}

Bid equilibrium_bid(int who, Valuation v0, Valuation v1,
                    const RepeatedState& /*state*/, Role role,
                    std::optional<Bid> observed_leader_bid) {
  if (v0 == v1) {
    throw Error(Errc::invalid_argument,
                "equilibrium strategy requires distinct values");
  }
  const int winner = v1.v > v0.v ? 1 : 0;
  const int loser_value = winner == 1 ? v0.v : v1.v;
  if (who != winner) return Bid(loser_value);
  if (role == Role::leader) return Bid(loser_value + 1);
  if (!observed_leader_bid.has_value()) {
    throw Error(Errc::invalid_argument, "follower needs the leader's bid");
  }
  const Bid p = *observed_leader_bid;
  if (p.p <= loser_value) return p;
  return Bid(p.p - 1);
}

Strategy equilibrium_strategy(int who, Valuation v0, Valuation v1) {
  if (v0 == v1) {
    throw Error(Errc::invalid_argument,
                "equilibrium strategy requires distinct values");
  }
  return [who, v0, v1](const RepeatedState& state, Role role,
                       std::optional<Bid> observed) {
    return equilibrium_bid(who, v0, v1, state, role, observed);
  };
}

Strategy truthful_strategy(Valuation v) {
  return [v](const RepeatedState&, Role, std::optional<Bid>) {
    return Bid(v.v);
  };
}

Strategy constant_strategy(Bid bid) {
  return [bid](const RepeatedState&, Role, std::optional<Bid>) { return bid; };
}

int default_max_rounds(std::int64_t M) {
  int log2_ceil = 0;
  std::int64_t pow2 = 1;
  while (pow2 < M) {
    pow2 *= 2;
    ++log2_ceil;
  }
  return 4 * log2_ceil + 4;
}

GameTrace simulate(Valuation v0, Valuation v1, std::int64_t M,
                   std::int64_t initial_m0, const Strategy& strat0,
                   const Strategy& strat1, int max_rounds) {
  if (M < 3 || M % 2 == 0) {
    throw Error(Errc::invalid_argument,
                "M must be odd and >= 3, got " + std::to_string(M));
  }
  if (max_rounds < 0) {
    throw Error(Errc::invalid_argument, "negative round cap");
  }
  RepeatedState state = make_state(initial_m0, M - initial_m0);

  GameTrace trace;
  trace.terminal = TerminalKind::truncated;
  for (int played = 0; played < max_rounds; ++played) {
    const int leader = leader_of(state);
    const Strategy& lead_strat = leader == 0 ? strat0 : strat1;
    const Strategy& follow_strat = leader == 0 ? strat1 : strat0;
    const Bid p_lead = lead_strat(state, Role::leader, std::nullopt);
    const Bid p_follow = follow_strat(state, Role::follower, p_lead);

    RoundResult round = play_round(state, v0, v1, p_lead, p_follow);
    trace.rounds.push_back(round.record);
    trace.total_u0 += round.record.u0;
    trace.total_u1 += round.record.u1;

    if (!round.next.has_value()) {
      trace.terminal = round.terminal;
      trace.final_m0 = round.terminal == TerminalKind::z0 ? M : 0;
      trace.final_m1 = M - trace.final_m0;
      return trace;
    }
    state = *round.next;
  }
  trace.final_m0 = state.m0;
  trace.final_m1 = state.m1;
  return trace;
}

}  // namespace absnft
