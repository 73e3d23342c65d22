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

#include "absnft/settlement.hpp"

#include <algorithm>

namespace absnft {

SettlementEngine::SettlementEngine(Bid p0, HalfUnits follower_budget,
                                   std::int64_t follower_units,
                                   std::vector<LeaderPosition> leaders,
                                   int option_deadline_ticks)
    : p0_(p0),
      follower_budget_(follower_budget),
      leaders_(std::move(leaders)),
      option_deadline_ticks_(option_deadline_ticks) {
  if (option_deadline_ticks_ < 1) {
    throw Error(Errc::invalid_argument, "option deadline must be >= 1 tick");
  }
  if (follower_units < 1) {
    throw Error(Errc::invalid_argument, "follower holds no units");
  }
  std::int64_t minority_total = 0;
  for (const LeaderPosition& l : leaders_) {
    if (l.units < 1) {
      throw Error(Errc::invalid_argument, "leader with no units");
    }
    minority_total += l.units;
  }
  if (follower_units <= minority_total) {
    throw Error(Errc::invalid_argument,
                "follower must hold a strict majority to trigger repurchase");
  }
  total_units_ = follower_units + minority_total;

  // Feasibility assumption: the follower can afford every minority unit at
  // its own bid.
  const HalfUnits needed =
      HalfUnits::from_units(minority_total * static_cast<std::int64_t>(p0_.p));
  if (follower_budget_ < needed) {
    throw Error(Errc::follower_budget_infeasible,
                "budget " + follower_budget_.to_string() + " < " +
                    needed.to_string());
  }

  holdings_[kFollower] = follower_units;
  cash_[kFollower] = HalfUnits();
  for (std::size_t i = 0; i < leaders_.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    holdings_[idx] = leaders_[i].units;
    cash_[idx] = HalfUnits();
  }
}

const LeaderPosition& SettlementEngine::leader_at(int leader) const {
  if (leader < 1 || static_cast<std::size_t>(leader) > leaders_.size()) {
    throw Error(Errc::invalid_argument,
                "no leader with index " + std::to_string(leader));
  }
  return leaders_[static_cast<std::size_t>(leader - 1)];
}

void SettlementEngine::require_pending_high_bidder(int leader) const {
  const LeaderPosition& pos = leader_at(leader);
  if (pos.bid.p <= p0_.p) {
    throw Error(Errc::settlement_phase,
                "leader " + std::to_string(leader) + " settles in step 1");
  }
  if (settled_.contains(leader) || options_.contains(leader)) {
    throw Error(Errc::settlement_phase,
                "leader " + std::to_string(leader) + " already resolved");
  }
  if (!step1_done_) {
    throw Error(Errc::settlement_phase, "step 1 has not run");
  }
  if (market_closed_) {
    throw Error(Errc::settlement_phase, "option market already closed");
  }
}

StepDelta& SettlementEngine::record(StepDelta delta) {
  history_.push_back(std::move(delta));
  return history_.back();
}

void SettlementEngine::move_cash(StepDelta& delta, int participant,
                                 HalfUnits amount) {
  cash_[participant] += amount;
  delta.cash.push_back(CashFlow{participant, amount});
}

void SettlementEngine::move_units(StepDelta& delta, int from, int to,
                                  std::int64_t units) {
  holdings_[from] -= units;
  holdings_[to] += units;
  delta.units.push_back(UnitFlow{from, to, units});
}

StepDelta SettlementEngine::run_step1() {
  if (step1_done_) {
    throw Error(Errc::settlement_phase, "step 1 already ran");
  }
  step1_done_ = true;

  StepDelta delta;
  delta.step = 1;
  delta.action = "follower_buys_low_bidders";
  for (std::size_t i = 0; i < leaders_.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    const LeaderPosition& pos = leaders_[i];
    if (pos.bid.p > p0_.p) continue;
    const HalfUnits price =
        HalfUnits::from_halves((p0_.p + pos.bid.p) * pos.units);
    move_cash(delta, kFollower, -price);
    move_cash(delta, idx, price);
    move_units(delta, idx, kFollower, pos.units);
    settled_[idx] = true;
  }
  return record(std::move(delta));
}

StepDelta SettlementEngine::pay(int leader) {
  require_pending_high_bidder(leader);
  const LeaderPosition& pos = leader_at(leader);

  const HalfUnits cost =
      HalfUnits::from_halves((p0_.p + pos.bid.p) * pos.units);
  if (pos.budget < cost) {
    throw Error(Errc::budget_exceeded,
                "leader " + std::to_string(leader) + " needs " +
                    cost.to_string() + ", budget " + pos.budget.to_string());
  }

  StepDelta delta;
  delta.step = 2;
  delta.action = "leader_" + std::to_string(leader) + "_pays";
  const HalfUnits follower_revenue =
      HalfUnits::from_halves((p0_.p + pos.bid.p - 1) * pos.units);
  move_cash(delta, leader, -cost);
  move_cash(delta, kFollower, follower_revenue);
  delta.discount = cost - follower_revenue;  // units/2 in half-unit scale
  discount_sink_ += delta.discount;
  move_units(delta, kFollower, leader, pos.units);
  settled_[leader] = true;
  return record(std::move(delta));
}

void SettlementEngine::post_option(int leader, std::int64_t price) {
  require_pending_high_bidder(leader);
  options_[leader] =
      RepurchaseOption{leader, price, OptionStatus::open, std::nullopt};
}

StepDelta SettlementEngine::pay_or_post_default_option(int leader) {
  try {
    return pay(leader);
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exceeded) throw;
    post_option(leader, 0);
    StepDelta delta;
    delta.step = 2;
    delta.action = "leader_" + std::to_string(leader) + "_posts_option";
    delta.warnings.push_back("BudgetExceeded: option posted at 0 for leader " +
                             std::to_string(leader));
    warnings_.push_back(delta.warnings.back());
    return record(std::move(delta));
  }
}

StepDelta SettlementEngine::accept_option(int leader, int buyer,
                                          HalfUnits buyer_budget) {
  auto it = options_.find(leader);
  if (it == options_.end() || it->second.status != OptionStatus::open) {
    throw Error(Errc::option_not_open,
                "no open option for leader " + std::to_string(leader));
  }
  const LeaderPosition& pos = leader_at(leader);
  const RepurchaseOption& option = it->second;

  const HalfUnits option_price = HalfUnits::from_units(option.price);
  const HalfUnits unit_cost =
      HalfUnits::from_halves((p0_.p + pos.bid.p) * pos.units);
  const HalfUnits total_cost = option_price + unit_cost;
  if (buyer_budget < total_cost) {
    throw Error(Errc::buyer_budget_exceeded,
                "buyer " + std::to_string(buyer) + " needs " +
                    total_cost.to_string());
  }

  StepDelta delta;
  delta.step = 3;
  delta.action = "buyer_" + std::to_string(buyer) + "_accepts_option_" +
                 std::to_string(leader);
  const HalfUnits follower_revenue =
      HalfUnits::from_halves((p0_.p + pos.bid.p - 1) * pos.units);
  move_cash(delta, buyer, -total_cost);
  move_cash(delta, leader, option_price);
  move_cash(delta, kFollower, follower_revenue);
  delta.discount = unit_cost - follower_revenue;
  discount_sink_ += delta.discount;
  move_units(delta, kFollower, buyer, pos.units);

  it->second.status = OptionStatus::sold;
  it->second.buyer = buyer;
  settled_[leader] = true;
  return record(std::move(delta));
}

std::vector<SettlementEngine::AcceptanceOutcome>
SettlementEngine::accept_options(std::vector<AcceptanceRequest> requests) {
  std::stable_sort(requests.begin(), requests.end(),
                   [](const AcceptanceRequest& a, const AcceptanceRequest& b) {
                     if (a.tick != b.tick) return a.tick < b.tick;
                     return a.buyer < b.buyer;
                   });
  std::vector<AcceptanceOutcome> outcomes;
  outcomes.reserve(requests.size());
  for (const AcceptanceRequest& req : requests) {
    AcceptanceOutcome outcome{req, false, ""};
    if (req.tick >= option_deadline_ticks_) {
      outcome.rejection = "OptionNotOpen: request past the market deadline";
      outcomes.push_back(std::move(outcome));
      continue;
    }
    try {
      accept_option(req.leader, req.buyer, req.buyer_budget);
      outcome.accepted = true;
    } catch (const Error& e) {
      outcome.rejection = e.what();
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

void SettlementEngine::close_option_market() {
  if (!step1_done_) {
    throw Error(Errc::settlement_phase, "step 1 has not run");
  }
  if (market_closed_) return;

  // A high bidder that did nothing counts as posting the default option.
  for (std::size_t i = 0; i < leaders_.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    if (leaders_[i].bid.p > p0_.p && !settled_.contains(idx) &&
        !options_.contains(idx)) {
      options_[idx] =
          RepurchaseOption{idx, 0, OptionStatus::open, std::nullopt};
    }
  }
  market_closed_ = true;
  for (auto& [leader, option] : options_) {
    if (option.status == OptionStatus::open) {
      option.status = OptionStatus::expired;
    }
  }
}

StepDelta SettlementEngine::run_step4() {
  if (!market_closed_) {
    throw Error(Errc::settlement_phase, "option market still open");
  }
  if (step4_done_) {
    throw Error(Errc::settlement_phase, "step 4 already ran");
  }
  step4_done_ = true;

  StepDelta delta;
  delta.step = 4;
  delta.action = "follower_discount_buyback";
  for (auto& [leader, option] : options_) {
    if (option.status != OptionStatus::expired) continue;
    const LeaderPosition& pos = leader_at(leader);
    const std::int64_t unit_price = 2 * p0_.p - pos.bid.p;  // full units
    if (unit_price < 0) {
      delta.warnings.push_back(
          "NegativePriceWarning: step-4 unit price " +
          std::to_string(unit_price) + " for leader " +
          std::to_string(leader));
      warnings_.push_back(delta.warnings.back());
    }
    const HalfUnits total = HalfUnits::from_units(unit_price * pos.units);
    move_cash(delta, kFollower, -total);
    move_cash(delta, leader, total);
    move_units(delta, leader, kFollower, pos.units);
    settled_[leader] = true;
  }
  return record(std::move(delta));
}

void SettlementEngine::run_all(
    const std::map<int, std::int64_t>& option_prices,
    std::vector<AcceptanceRequest> requests) {
  run_step1();
  for (std::size_t i = 0; i < leaders_.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    if (leaders_[i].bid.p <= p0_.p) continue;
    auto chosen = option_prices.find(idx);
    if (chosen != option_prices.end()) {
      post_option(idx, chosen->second);
    } else {
      pay_or_post_default_option(idx);
    }
  }
  accept_options(std::move(requests));
  close_option_market();
  run_step4();
}

void SettlementEngine::check_conservation() const {
  HalfUnits cash_total;
  for (const auto& [participant, delta] : cash_) cash_total += delta;
  if (cash_total + discount_sink_ != HalfUnits()) {
    throw Error(Errc::invalid_argument,
                "cash leak: deltas " + cash_total.to_string() + " + sink " +
                    discount_sink_.to_string() + " != 0");
  }
  std::int64_t units = 0;
  for (const auto& [participant, held] : holdings_) {
    if (held < 0) {
      throw Error(Errc::invalid_argument,
                  "negative holding for participant " +
                      std::to_string(participant));
    }
    units += held;
  }
  if (units != total_units_) {
    throw Error(Errc::invalid_argument, "unit count changed");
  }
  if (step4_done_) {
    for (const auto& [leader, option] : options_) {
      if (option.status == OptionStatus::open) {
        throw Error(Errc::invalid_argument, "open option after step 4");
      }
    }
    for (std::size_t i = 0; i < leaders_.size(); ++i) {
      const int idx = static_cast<int>(i) + 1;
      if (!settled_.contains(idx)) {
        throw Error(Errc::invalid_argument,
                    "leader " + std::to_string(idx) +
                        " unresolved after step 4");
      }
    }
  }
}

ResolvedBid resolve_bid(const BidPolicy& policy, std::optional<Bid> active_bid,
                        int clock_ticks) {
  if (active_bid.has_value() && clock_ticks < policy.timeout_ticks) {
    return ResolvedBid{*active_bid, BidSource::active};
  }
  if (policy.custodian_bid.has_value()) {
    return ResolvedBid{*policy.custodian_bid, BidSource::custodian};
  }
  return ResolvedBid{policy.predetermined, BidSource::predetermined};
}

}  // namespace absnft
