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
#include <optional>
#include <string>
#include <vector>

#include "absnft/money.hpp"

namespace absnft {

// Budget-constrained settlement of one repurchase round.
//
//   Step 1: the follower pays the midpoint for every leader it outbid and
//           collects their units.
//   Step 2: every leader that outbid the follower either pays the midpoint
//           for the follower's matching units (follower receives a half
//           unit less per unit; the gap lands in the discount sink) or
//           posts a transferable repurchase option at a price of its
//           choosing, zero by default, negative allowed.
//   Step 3: anyone may buy an open option, paying the option price to the
//           leader and the midpoint for the units; same discounted revenue
//           to the follower.
//   Step 4: options still open when the market closes expire, and the
//           follower buys those leaders out at 2*p0 - pi per unit (below
//           its own bid; negative prices execute but are flagged).
//
// The engine is a sequential state machine per token; steps must run in
// order and every cash movement is recorded so conservation is checkable:
// the participants' cash deltas plus the discount sink sum to zero.

// Participant indices: 0 is the follower, 1..k the leaders in construction
// order, anything else an external option buyer.
constexpr int kFollower = 0;

struct LeaderPosition {
  Bid bid{0};
  std::int64_t units = 0;
  HalfUnits budget;
};

enum class OptionStatus { open, sold, expired };

struct RepurchaseOption {
  int holder = 0;           // leader participant index
  std::int64_t price = 0;   // full units, may be negative
  OptionStatus status = OptionStatus::open;
  std::optional<int> buyer;
};

struct CashFlow {
  int participant = 0;
  HalfUnits amount;  // signed delta
};

struct UnitFlow {
  int from = 0;
  int to = 0;
  std::int64_t units = 0;
};

struct StepDelta {
  int step = 0;
  std::string action;
  std::vector<CashFlow> cash;
  std::vector<UnitFlow> units;
  HalfUnits discount;  // this action's contribution to the sink
  std::vector<std::string> warnings;
};

class SettlementEngine {
 public:
  // Throws InvalidArgument unless the follower holds a strict majority, and
  // FollowerBudgetInfeasible unless its budget covers (M - m0) * p0.
  // option_deadline_ticks defines the step-3 boundary: acceptance requests
  // at or past it are rejected.
  SettlementEngine(Bid p0, HalfUnits follower_budget,
                   std::int64_t follower_units,
                   std::vector<LeaderPosition> leaders,
                   int option_deadline_ticks = 16);

  // Step 1: all leaders with pi <= p0, in index order. Runs once.
  StepDelta run_step1();

  // Step 2 for one leader with pi > p0. pay() throws BudgetExceeded when
  // the leader cannot cover the midpoint; pay_or_post_default_option()
  // falls back to posting an option at price 0 instead.
  StepDelta pay(int leader);
  StepDelta pay_or_post_default_option(int leader);
  void post_option(int leader, std::int64_t price);

  // Step 3: one acceptance. Throws OptionNotOpen / BuyerBudgetExceeded.
  StepDelta accept_option(int leader, int buyer, HalfUnits buyer_budget);

  struct AcceptanceRequest {
    int leader = 0;
    int buyer = 0;
    HalfUnits buyer_budget;
    int tick = 0;
  };
  struct AcceptanceOutcome {
    AcceptanceRequest request;
    bool accepted = false;
    std::string rejection;
  };
  // Serializes concurrent acceptance requests first-come-first-served by
  // (tick, buyer index); losers of a race are rejected, not errors.
  std::vector<AcceptanceOutcome> accept_options(
      std::vector<AcceptanceRequest> requests);

  // End of step 3: pending leaders that did nothing get the implicit
  // price-0 option, then every open option expires into step 4's set.
  void close_option_market();

  // Step 4: follower buys out every expired-option leader at 2*p0 - pi.
  StepDelta run_step4();

  // Convenience: steps 1-4 with per-leader step-2 choices and a batch of
  // acceptance requests. choices maps leader index to an option price;
  // leaders absent from it attempt to pay (default option on budget
  // failure).
  void run_all(const std::map<int, std::int64_t>& option_prices,
               std::vector<AcceptanceRequest> requests);

  const std::vector<StepDelta>& history() const { return history_; }
  const std::map<int, HalfUnits>& cash_deltas() const { return cash_; }
  const std::map<int, std::int64_t>& holdings() const { return holdings_; }
  HalfUnits discount_sink() const { return discount_sink_; }
  const std::map<int, RepurchaseOption>& options() const { return options_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::int64_t total_units() const { return total_units_; }
  Bid follower_bid() const { return p0_; }

  // Throws unless cash deltas + sink sum to zero, unit totals are conserved
  // and non-negative, and no option is left open.
  void check_conservation() const;

 private:
  StepDelta& record(StepDelta delta);
  void move_cash(StepDelta& delta, int participant, HalfUnits amount);
  void move_units(StepDelta& delta, int from, int to, std::int64_t units);
  const LeaderPosition& leader_at(int leader) const;
  void require_pending_high_bidder(int leader) const;

  Bid p0_;
  HalfUnits follower_budget_;
  std::vector<LeaderPosition> leaders_;
  std::int64_t total_units_ = 0;
  int option_deadline_ticks_ = 16;

  bool step1_done_ = false;
  bool market_closed_ = false;
  bool step4_done_ = false;
  std::map<int, bool> settled_;  // leader index -> deal resolved
  std::map<int, RepurchaseOption> options_;

  std::map<int, HalfUnits> cash_;
  std::map<int, std::int64_t> holdings_;
  HalfUnits discount_sink_;
  std::vector<StepDelta> history_;
  std::vector<std::string> warnings_;
};

// Lazy-bidder resolution. Every holder must predetermine a bid when
// acquiring shares; an administrator may be registered to bid in their
// stead. Resolution is total: an active bid inside the window wins, then
// the custodian's bid, then the predetermined one.
struct BidPolicy {
  Bid predetermined{0};
  std::optional<Bid> custodian_bid;
  int timeout_ticks = 1;
};

enum class BidSource { active, custodian, predetermined };

struct ResolvedBid {
  Bid bid{0};
  BidSource source = BidSource::predetermined;
};

ResolvedBid resolve_bid(const BidPolicy& policy, std::optional<Bid> active_bid,
                        int clock_ticks);

}  // namespace absnft
