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

#include <doctest.h>

#include <cstdlib>

#include "absnft/repeated.hpp"
#include "absnft/rng.hpp"

using namespace absnft;

namespace {
HalfUnits halves(std::int64_t h) { return HalfUnits::from_halves(h); }
}  // namespace

TEST_CASE("the majority holder triggers, so the minority side leads") {
  CHECK(leader_of(RepeatedState{2, 1, 1}) == 1);
  CHECK(leader_of(RepeatedState{1, 2, 1}) == 0);
  CHECK_THROWS_AS(leader_of(RepeatedState{3, 3, 1}), Error);
  CHECK_THROWS_AS(make_state(3, 3), Error);   // even total
  CHECK_THROWS_AS(make_state(0, 3), Error);
}

TEST_CASE("losing round doubles the minority and discounts the seller") {
  const RoundResult r = play_round(make_state(2, 1), Valuation(2),
                                   Valuation(5), Bid(3), Bid(2));
  REQUIRE(r.next.has_value());
  CHECK(r.next->m0 == 1);
  CHECK(r.next->m1 == 2);
  CHECK(r.next->round == 2);
  CHECK(r.record.leader == 1);
  CHECK(r.record.buyer == 1);
  CHECK(r.record.units_moved == 1);
  CHECK(r.record.unit_price == halves(5));  // 2.5
  CHECK(r.record.u0 == HalfUnits());
  CHECK(r.record.u1 == halves(5));          // 2.5
}

TEST_CASE("matched bids let the follower buy out the leader and end play") {
  const RoundResult r = play_round(make_state(1, 2, 2), Valuation(2),
                                   Valuation(5), Bid(2), Bid(2));
  CHECK(!r.next.has_value());
  CHECK(r.terminal == TerminalKind::z1);
  CHECK(r.record.buyer == 1);
  CHECK(r.record.u0 == HalfUnits());
  CHECK(r.record.u1 == HalfUnits::from_units(3));
}

TEST_CASE("truthful bids never lose a round") {
  DeterministicRng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t M = 2 * rng.uniform(1, 6) + 1;
    std::int64_t m0 = rng.uniform(1, M - 1);
    if (2 * m0 == M) ++m0;  // unreachable for odd M, kept for clarity
    const Valuation v0(static_cast<int>(rng.uniform(1, 8)));
    const Valuation v1(static_cast<int>(rng.uniform(1, 8)));
    const Bid other(static_cast<int>(rng.uniform(0, 10)));
    const RepeatedState state = make_state(m0, M - m0);
    const int leader = leader_of(state);

    // each side truthful in turn, opponent arbitrary
    const Bid lead_truthful = leader == 0 ? Bid(v0.v) : Bid(v1.v);
    const RoundResult a = play_round(state, v0, v1, lead_truthful, other);
    CHECK((leader == 0 ? a.record.u0 : a.record.u1) >= HalfUnits());

    const Bid follow_truthful = leader == 0 ? Bid(v1.v) : Bid(v0.v);
    const RoundResult b = play_round(state, v0, v1, other, follow_truthful);
    CHECK((leader == 0 ? b.record.u1 : b.record.u0) >= HalfUnits());
  }
}

TEST_CASE("certified strategy bids") {
  const Valuation v0(2);
  const Valuation v1(5);
  // N1 values more: leads with v0+1, follows by shadowing.
  CHECK(equilibrium_bid(1, v0, v1, RepeatedState{2, 1, 1}, Role::leader,
                        std::nullopt) == Bid(3));
  CHECK(equilibrium_bid(0, v0, v1, RepeatedState{2, 1, 1}, Role::follower,
                        Bid(3)) == Bid(2));
  CHECK(equilibrium_bid(0, v0, v1, RepeatedState{1, 2, 1}, Role::leader,
                        std::nullopt) == Bid(2));
  CHECK(equilibrium_bid(1, v0, v1, RepeatedState{1, 2, 1}, Role::follower,
                        Bid(2)) == Bid(2));
  // off-path observation
  CHECK(equilibrium_bid(1, v0, v1, RepeatedState{1, 2, 1}, Role::follower,
                        Bid(7)) == Bid(6));
  CHECK_THROWS_AS(equilibrium_strategy(0, Valuation(3), Valuation(3)), Error);
}

TEST_CASE("two-round certified trace") {
  const Valuation v0(2);
  const Valuation v1(5);
  const GameTrace trace =
      simulate(v0, v1, 3, 2, equilibrium_strategy(0, v0, v1),
               equilibrium_strategy(1, v0, v1), default_max_rounds(3));
  REQUIRE(trace.rounds.size() == 2);
  CHECK(trace.terminal == TerminalKind::z1);
  CHECK(trace.total_u0 == HalfUnits());
  CHECK(trace.total_u1 == halves(11));  // 5.5
  CHECK(trace.rounds[0].p1.p == 3);
  CHECK(trace.rounds[0].p0.p == 2);
  CHECK(trace.rounds[1].p0.p == 2);
  CHECK(trace.rounds[1].p1.p == 2);
}

TEST_CASE("higher-value majority holder wins immediately") {
  const Valuation v0(5);
  const Valuation v1(2);
  const GameTrace trace =
      simulate(v0, v1, 3, 2, equilibrium_strategy(0, v0, v1),
               equilibrium_strategy(1, v0, v1), default_max_rounds(3));
  CHECK(trace.terminal == TerminalKind::z0);
  CHECK(trace.total_u1 == HalfUnits());
}

TEST_CASE("zero bids stop the game in one round") {
  const GameTrace trace =
      simulate(Valuation(2), Valuation(5), 3, 2, constant_strategy(Bid(0)),
               constant_strategy(Bid(0)), default_max_rounds(3));
  REQUIRE(trace.rounds.size() == 1);
  CHECK(trace.terminal == TerminalKind::z0);
}

TEST_CASE("holdings are conserved and the minority doubles on buy rounds") {
  DeterministicRng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t M = 2 * rng.uniform(1, 7) + 1;
    const std::int64_t m0 = rng.uniform(1, M - 1);
    const int c0 = static_cast<int>(rng.uniform(0, 6));
    const int c1 = static_cast<int>(rng.uniform(0, 6));
    const GameTrace trace =
        simulate(Valuation(3), Valuation(4), M, m0,
                 constant_strategy(Bid(c0)), constant_strategy(Bid(c1)),
                 default_max_rounds(M));
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      const RoundRecord& rec = trace.rounds[i];
      CHECK(rec.m0_before + rec.m1_before == M);
      CHECK(rec.units_moved == std::min(rec.m0_before, rec.m1_before));
      if (i + 1 < trace.rounds.size()) {
        const RoundRecord& next = trace.rounds[i + 1];
        const std::int64_t buyer_next =
            rec.buyer == 0 ? next.m0_before : next.m1_before;
        CHECK(buyer_next == 2 * rec.units_moved);
      }
    }
    CHECK(trace.final_m0 + trace.final_m1 == M);
  }
}

TEST_CASE("per-round joint utility is capped on every buy round") {
  DeterministicRng rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t M = 2 * rng.uniform(1, 6) + 1;
    const std::int64_t m0 = rng.uniform(1, M - 1);
    const Valuation v0(static_cast<int>(rng.uniform(1, 6)));
    const Valuation v1(static_cast<int>(rng.uniform(1, 6)));
    const RepeatedState state = make_state(m0, M - m0);
    const Bid lead(static_cast<int>(rng.uniform(0, 8)));
    const Bid follow(static_cast<int>(rng.uniform(0, 8)));
    const RoundResult r = play_round(state, v0, v1, lead, follow);
    if (!r.next.has_value()) continue;  // bound applies to buy rounds
    const std::int64_t dm0 = r.next->m0 - state.m0;
    const std::int64_t cap_halves = 2 * dm0 * (v0.v - v1.v) - 1;
    CHECK((r.record.u0 + r.record.u1).halves() <= cap_halves);
  }
}

TEST_CASE("endless play bleeds joint utility at least half a unit per round") {
  // leader always overbids the follower => nobody ever terminates
  const Strategy stubborn = [](const RepeatedState&, Role role,
                               std::optional<Bid>) {
    return role == Role::leader ? Bid(1) : Bid(0);
  };
  const Valuation v0(4);
  const Valuation v1(2);
  std::int64_t previous_cap = 0;
  bool first = true;
  for (int horizon : {2, 4, 6, 8, 10, 40}) {
    const GameTrace trace =
        simulate(v0, v1, 9, 4, stubborn, stubborn, horizon);
    CHECK(trace.terminal == TerminalKind::truncated);
    CHECK(static_cast<int>(trace.rounds.size()) == horizon);
    const HalfUnits joint = trace.total_u0 + trace.total_u1;
    // M|v0-v1| - T/2, in halves; the cap drops without bound as T grows.
    const std::int64_t cap_halves = 2 * 9 * std::abs(v0.v - v1.v) - horizon;
    CHECK(joint.halves() <= cap_halves);
    if (!first) CHECK(cap_halves < previous_cap);
    previous_cap = cap_halves;
    first = false;
  }
}

TEST_CASE("winner and loser totals under certified play") {
  for (std::int64_t M : {3, 5, 7, 9}) {
    for (int v0 = 1; v0 <= 6; ++v0) {
      for (int v1 = 1; v1 <= 6; ++v1) {
        if (v0 == v1) continue;
        for (std::int64_t m0 = 1; m0 < M; ++m0) {
          const Valuation val0(v0);
          const Valuation val1(v1);
          const GameTrace trace = simulate(
              val0, val1, M, m0, equilibrium_strategy(0, val0, val1),
              equilibrium_strategy(1, val0, val1), default_max_rounds(M));
          const int winner = v0 > v1 ? 0 : 1;
          CHECK(trace.terminal ==
                (winner == 0 ? TerminalKind::z0 : TerminalKind::z1));

          const HalfUnits loser_total =
              winner == 0 ? trace.total_u1 : trace.total_u0;
          CHECK(loser_total == HalfUnits());

          // Winner gain decomposes into the full value spread over acquired
          // units minus half a unit for each unit bought while leading.
          const std::int64_t initial_w = winner == 0 ? m0 : M - m0;
          std::int64_t led_units = 0;
          for (const RoundRecord& rec : trace.rounds) {
            if (rec.leader == winner) led_units += rec.units_moved;
          }
          const std::int64_t dv = std::abs(v0 - v1);
          const std::int64_t expected_halves =
              2 * (M - initial_w) * dv - led_units;
          const HalfUnits winner_total =
              winner == 0 ? trace.total_u0 : trace.total_u1;
          CHECK(winner_total == halves(expected_halves));

          // From any state where the winner already holds the majority, the
          // remaining play pays exactly spread * remaining units; with a
          // majority start this pins the whole-game total.
          for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
            const std::int64_t m_w = winner == 0 ? trace.rounds[r].m0_before
                                                 : trace.rounds[r].m1_before;
            if (2 * m_w < M) continue;
            HalfUnits suffix;
            for (std::size_t j = r; j < trace.rounds.size(); ++j) {
              suffix += winner == 0 ? trace.rounds[j].u0 : trace.rounds[j].u1;
            }
            CHECK(suffix == HalfUnits::from_units((M - m_w) * dv));
          }
        }
      }
    }
  }
}

TEST_CASE("engine rejects even share totals") {
  CHECK_THROWS_AS(simulate(Valuation(1), Valuation(2), 4, 2,
                           constant_strategy(Bid(0)), constant_strategy(Bid(0)),
                           4),
                  Error);
}
