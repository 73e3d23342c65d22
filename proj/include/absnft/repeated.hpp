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
#include <vector>

#include "absnft/mechanism.hpp"
#include "absnft/money.hpp"

namespace absnft {

// Repeated two-player repurchase game over M shares, M odd so one side
// always holds a strict majority. Each round the majority holder triggers a
// repurchase and bids second (follower); the minority holder bids first
// (leader). If the leader's bid is at most the follower's, the follower
// buys the leader's whole holding and the game ends; otherwise the leader
// buys the same number of units from the follower at a discounted seller
// price, doubling the minority stake, and play continues.

struct RepeatedState {
  std::int64_t m0 = 0;
  std::int64_t m1 = 0;
  int round = 1;

  std::int64_t total() const { return m0 + m1; }
};

// Validates M odd and holdings positive/unequal. Throws InvalidArgument or
// EqualHoldings.
RepeatedState make_state(std::int64_t m0, std::int64_t m1, int round = 1);

// 1 when N0 holds the majority (majority triggers, so the *other* side
// leads), 0 when N1 holds it. Throws EqualHoldings on m0 == m1.
int leader_of(const RepeatedState& state);

enum class Role { leader, follower };

enum class TerminalKind {
  none,       // game continues
  z0,         // N0 holds all M shares
  z1,         // N1 holds all M shares
  truncated,  // round cap reached without termination
};

struct RoundRecord {
  int round = 0;
  std::int64_t m0_before = 0;
  std::int64_t m1_before = 0;
  int leader = 0;
  Bid p0{0};
  Bid p1{0};
  int buyer = 0;
  std::int64_t units_moved = 0;     // always the minority pre-round holding
  HalfUnits unit_price;             // buyer's price per unit
  HalfUnits seller_unit_revenue;
  HalfUnits u0;
  HalfUnits u1;
};

struct RoundResult {
  std::optional<RepeatedState> next;  // empty on termination
  TerminalKind terminal = TerminalKind::none;
  RoundRecord record;
};

// Applies one round's bids to the state. Prices, unit movement and both
// players' exact utilities are recorded; trade direction follows the
// leader/follower comparison described above.
RoundResult play_round(const RepeatedState& state, Valuation v0, Valuation v1,
                       Bid leader_bid, Bid follower_bid);

// A deterministic bidding rule: given the player's seat this round and, when
// following, the observed leader bid.
using Strategy =
    std::function<Bid(const RepeatedState&, Role, std::optional<Bid>)>;

// The certified equilibrium profile when values differ. The lower-value
// player always bids its own value; the higher-value player overbids by one
// when leading and shadows the observed bid (match, or undercut by one above
// the opponent's value) when following. Defined for off-path observations
// too.
Bid equilibrium_bid(int who, Valuation v0, Valuation v1,
                    const RepeatedState& state, Role role,
                    std::optional<Bid> observed_leader_bid);

// Strategy objects for simulate(). equilibrium_strategy requires v0 != v1.
Strategy equilibrium_strategy(int who, Valuation v0, Valuation v1);
Strategy truthful_strategy(Valuation v);
Strategy constant_strategy(Bid bid);

struct GameTrace {
  std::vector<RoundRecord> rounds;
  TerminalKind terminal = TerminalKind::truncated;
  std::int64_t final_m0 = 0;
  std::int64_t final_m1 = 0;
  HalfUnits total_u0;
  HalfUnits total_u1;
};

// Non-terminal rounds double the minority stake, so log2(M) bounds the
// rounds between majority flips; the default cap flags pathological
// (cycling) strategy pairs as truncated instead of looping.
int default_max_rounds(std::int64_t M);

GameTrace simulate(Valuation v0, Valuation v1, std::int64_t M,
                   std::int64_t initial_m0, const Strategy& strat0,
                   const Strategy& strat1, int max_rounds);

}  // namespace absnft
