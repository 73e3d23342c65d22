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

#include "absnft/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "absnft/bayesian.hpp"
#include "absnft/mechanism.hpp"
#include "absnft/multiplayer.hpp"
#include "absnft/oracle.hpp"
#include "absnft/repeated.hpp"
#include "absnft/rng.hpp"
#include "absnft/settlement.hpp"
#include "absnft/stackelberg2p.hpp"

namespace absnft::scenario {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- parsing

[[noreturn]] void bad_config(const std::string& why) {
  throw Error(Errc::malformed_config, why);
}

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad_config(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::int64_t as_int(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (!field.is_number_integer()) {
    bad_config(std::string("field \"") + key + "\" must be an integer");
  }
  return field.get<std::int64_t>();
}

std::int64_t as_int_or(const json& j, const char* key, std::int64_t fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return as_int(j, key);
}

std::string as_string(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (!field.is_string()) {
    bad_config(std::string("field \"") + key + "\" must be a string");
  }
  return field.get<std::string>();
}

Valuation valuation_of(const json& j, const char* key) {
  const std::int64_t v = as_int(j, key);
  if (v < 1) bad_config(std::string("\"") + key + "\" must be >= 1");
  return Valuation(static_cast<int>(v));
}

Bid bid_of(const json& j, const char* key) {
  const std::int64_t p = as_int(j, key);
  if (p < 0) bad_config(std::string("\"") + key + "\" must be >= 0");
  return Bid(static_cast<int>(p));
}

std::int64_t int_in_pair(const json& entry) {
  if (entry.is_number_integer()) return entry.get<std::int64_t>();
  if (entry.is_string()) {
    try {
      return std::stoll(entry.get<std::string>());
    } catch (const std::exception&) {
      bad_config("rational component is not an integer: " + entry.dump());
    }
  }
  bad_config("rational component must be an integer or integer string");
}

DiscreteValueDistribution parse_distribution(const json& j) {
  const json& support = require_field(j, "support");
  const json& probs = require_field(j, "probs");
  if (!support.is_array() || !probs.is_array() ||
      support.size() != probs.size() || support.empty()) {
    bad_config("\"support\" and \"probs\" must be equal-length arrays");
  }
  DiscreteValueDistribution dist;
  for (const json& v : support) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
      bad_config("support values must be integers >= 1");
    }
    dist.support.push_back(Valuation(v.get<int>()));
  }
  for (const json& pr : probs) {
    if (!pr.is_array() || pr.size() != 2) {
      bad_config("each probability must be a [numerator, denominator] pair");
    }
    dist.probs.emplace_back(int_in_pair(pr[0]), int_in_pair(pr[1]));
  }
  try {
    dist.validate();
  } catch (const Error& e) {
    bad_config(e.what());
  }
  return dist;
}

// --------------------------------------------------------------- emitting

void put_money(json& obj, const std::string& name, HalfUnits v) {
  obj[name + "_halves"] = v.halves();
  obj[name] = v.to_string();
}

json rational_json(const Rational& r) { return json::array({r.num(), r.den()}); }

json profile2p_json(const EquilibriumProfile2P& eq) {
  json out;
  out["p0"] = eq.p0.p;
  out["p1"] = eq.p1.p;
  put_money(out, "u0", eq.u0);
  put_money(out, "u1", eq.u1);
  return out;
}

const char* terminal_name(TerminalKind t) {
  switch (t) {
    case TerminalKind::z0:
      return "z0";
    case TerminalKind::z1:
      return "z1";
    case TerminalKind::truncated:
      return "truncated";
    case TerminalKind::none:
      break;
  }
  return "none";
}

json trace_json(const GameTrace& trace) {
  json rounds = json::array();
  for (const RoundRecord& r : trace.rounds) {
    json rec;
    rec["round"] = r.round;
    rec["m0"] = r.m0_before;
    rec["m1"] = r.m1_before;
    rec["leader"] = r.leader;
    rec["p0"] = r.p0.p;
    rec["p1"] = r.p1.p;
    rec["buyer"] = r.buyer;
    rec["units_moved"] = r.units_moved;
    put_money(rec, "unit_price", r.unit_price);
    put_money(rec, "seller_unit_revenue", r.seller_unit_revenue);
    put_money(rec, "u0", r.u0);
    put_money(rec, "u1", r.u1);
    rounds.push_back(std::move(rec));
  }
  json out;
  out["rounds"] = std::move(rounds);
  out["terminal"] = terminal_name(trace.terminal);
  out["final_m0"] = trace.final_m0;
  out["final_m1"] = trace.final_m1;
  put_money(out, "total_u0", trace.total_u0);
  put_money(out, "total_u1", trace.total_u1);
  return out;
}

// ------------------------------------------------------------- subcommands

json run_solve2p(const json& config) {
  const Valuation v0 = valuation_of(config, "v0");
  const Valuation v1 = valuation_of(config, "v1");
  const std::int64_t m1 = as_int_or(config, "m1", 1);
  if (m1 < 1) bad_config("\"m1\" must be >= 1");
  return profile2p_json(solve_se(v0, v1, m1));
}

json run_bayes(const json& config) {
  const Valuation v1 = valuation_of(config, "v1");
  const std::int64_t m1 = as_int_or(config, "m1", 1);
  if (m1 < 1) bad_config("\"m1\" must be >= 1");
  const DiscreteValueDistribution dist =
      parse_distribution(require_field(config, "dist"));

  const std::vector<Bid> tied = bayesian_tied_optimal_bids(v1, dist, m1);
  const Bid p1_star = tied.front();

  json result;
  result["p1_star"] = p1_star.p;
  json tied_json = json::array();
  for (const Bid& b : tied) tied_json.push_back(b.p);
  result["tied_optimal_bids"] = std::move(tied_json);
  const Rational expected = expected_leader_utility(p1_star, v1, dist, m1);
  result["expected_utility_halves"] = rational_json(expected);

  if (config.contains("actual_v0")) {
    const Valuation actual_v0 = valuation_of(config, "actual_v0");
    result["realized"] = profile2p_json(bayesian_se(actual_v0, v1, dist, m1));
  }
  return result;
}

json run_repeated(const json& config) {
  const Valuation v0 = valuation_of(config, "v0");
  const Valuation v1 = valuation_of(config, "v1");
  const std::int64_t M = as_int(config, "M");
  if (M < 3 || M % 2 == 0) bad_config("\"M\" must be odd and >= 3");
  const std::int64_t m0 = as_int(config, "m0");
  if (m0 < 1 || m0 >= M) bad_config("\"m0\" must be in [1, M-1]");
  const int max_rounds = static_cast<int>(
      as_int_or(config, "max_rounds", default_max_rounds(M)));

  Strategy s0;
  Strategy s1;
  const json& strategies = require_field(config, "strategies");
  if (strategies.is_string()) {
    const std::string name = strategies.get<std::string>();
    if (name == "equilibrium") {
      if (v0 == v1) bad_config("equilibrium play needs distinct values");
      s0 = equilibrium_strategy(0, v0, v1);
      s1 = equilibrium_strategy(1, v0, v1);
    } else if (name == "truthful") {
      s0 = truthful_strategy(v0);
      s1 = truthful_strategy(v1);
    } else {
      bad_config("unknown strategy \"" + name + "\"");
    }
  } else if (strategies.is_object() && strategies.contains("constant")) {
    const json& bids = strategies.at("constant");
    if (!bids.is_array() || bids.size() != 2) {
      bad_config("\"constant\" must be a [bid0, bid1] pair");
    }
    s0 = constant_strategy(Bid(bids[0].get<int>()));
    s1 = constant_strategy(Bid(bids[1].get<int>()));
  } else if (strategies.is_object() && strategies.contains("role_constant")) {
    // Same bid rule for both players, keyed by seat. Overbidding as leader
    // while underbidding as follower never terminates; the round cap turns
    // that into a truncated trace.
    const json& roles = strategies.at("role_constant");
    const Bid lead = bid_of(roles, "leader");
    const Bid follow = bid_of(roles, "follower");
    const Strategy by_role = [lead, follow](const RepeatedState&, Role role,
                                            std::optional<Bid>) {
      return role == Role::leader ? lead : follow;
    };
    s0 = by_role;
    s1 = by_role;
  } else {
    bad_config("\"strategies\" must be \"equilibrium\", \"truthful\", "
               "{\"constant\": [b0, b1]} or {\"role_constant\": "
               "{\"leader\": b, \"follower\": b'}}");
  }

  return trace_json(simulate(v0, v1, M, m0, s0, s1, max_rounds));
}

std::vector<LeaderHolding> parse_holdings(const json& config) {
  const json& holdings_json = require_field(config, "holdings");
  if (!holdings_json.is_array() || holdings_json.empty()) {
    bad_config("\"holdings\" must be a non-empty array");
  }
  std::vector<LeaderHolding> holdings;
  for (const json& h : holdings_json) {
    const std::int64_t units = as_int(h, "units");
    if (units < 1) bad_config("holding units must be >= 1");
    holdings.push_back(LeaderHolding{units, valuation_of(h, "value")});
  }
  return holdings;
}

json run_multi(const json& config) {
  const Valuation v0 = valuation_of(config, "v0");
  const std::vector<LeaderHolding> holdings = parse_holdings(config);
  std::int64_t minority = 0;
  for (const LeaderHolding& h : holdings) minority += h.units;
  const std::int64_t m0 = as_int_or(config, "m0", minority + 1);
  if (m0 <= minority) {
    bad_config("follower holding m0 must exceed the combined minority (" +
               std::to_string(minority) + ") to trigger a repurchase");
  }

  const MultiEquilibrium eq = solve_multiplayer_se(v0, holdings);
  json result;
  result["p0"] = eq.profile.p0.p;
  json bids = json::array();
  for (const Bid& b : eq.profile.leader_bids) bids.push_back(b.p);
  result["leader_bids"] = std::move(bids);
  put_money(result, "u0", eq.u0);
  json utils = json::array();
  for (std::size_t i = 0; i < eq.leader_utils.size(); ++i) {
    json u;
    u["leader"] = static_cast<int>(i) + 1;
    put_money(u, "utility", eq.leader_utils[i]);
    utils.push_back(std::move(u));
  }
  result["leader_utilities"] = std::move(utils);
  result["m0"] = m0;
  result["total_units"] = m0 + minority;
  return result;
}

json step_delta_json(const StepDelta& delta) {
  json out;
  out["step"] = delta.step;
  out["action"] = delta.action;
  json cash = json::array();
  for (const CashFlow& flow : delta.cash) {
    json f;
    f["participant"] = flow.participant;
    put_money(f, "amount", flow.amount);
    cash.push_back(std::move(f));
  }
  out["cash"] = std::move(cash);
  json units = json::array();
  for (const UnitFlow& flow : delta.units) {
    json f;
    f["from"] = flow.from;
    f["to"] = flow.to;
    f["units"] = flow.units;
    units.push_back(std::move(f));
  }
  out["units"] = std::move(units);
  put_money(out, "discount", delta.discount);
  out["warnings"] = delta.warnings;
  return out;
}

json run_settle(const json& config) {
  const Bid p0 = bid_of(config, "p0");
  const std::int64_t m0 = as_int(config, "m0");
  const HalfUnits follower_budget =
      HalfUnits::from_halves(as_int(config, "follower_budget_halves"));
  const json& leaders_json = require_field(config, "leaders");
  if (!leaders_json.is_array()) bad_config("\"leaders\" must be an array");

  std::vector<LeaderPosition> leaders;
  std::map<int, std::int64_t> option_prices;
  int index = 0;
  for (const json& l : leaders_json) {
    ++index;
    LeaderPosition pos;
    pos.bid = bid_of(l, "bid");
    pos.units = as_int(l, "units");
    pos.budget = HalfUnits::from_halves(as_int_or(l, "budget_halves", 0));
    leaders.push_back(pos);
    if (l.contains("option_price")) {
      option_prices[index] = as_int(l, "option_price");
    }
  }

  std::vector<SettlementEngine::AcceptanceRequest> requests;
  if (config.contains("acceptances")) {
    const json& acceptances = config.at("acceptances");
    if (!acceptances.is_array()) bad_config("\"acceptances\" must be an array");
    for (const json& a : acceptances) {
      SettlementEngine::AcceptanceRequest req;
      req.leader = static_cast<int>(as_int(a, "leader"));
      req.buyer = static_cast<int>(as_int(a, "buyer"));
      req.buyer_budget = HalfUnits::from_halves(as_int(a, "budget_halves"));
      req.tick = static_cast<int>(as_int_or(a, "tick", 0));
      requests.push_back(req);
    }
  }
  const int deadline =
      static_cast<int>(as_int_or(config, "option_deadline_ticks", 16));

  SettlementEngine engine(p0, follower_budget, m0, std::move(leaders),
                          deadline);
  engine.run_all(option_prices, std::move(requests));
  engine.check_conservation();

  json result;
  json steps = json::array();
  for (const StepDelta& delta : engine.history()) {
    steps.push_back(step_delta_json(delta));
  }
  result["steps"] = std::move(steps);

  json cash;
  for (const auto& [participant, delta] : engine.cash_deltas()) {
    json f;
    f["participant"] = participant;
    put_money(f, "delta", delta);
    cash.push_back(std::move(f));
  }
  result["cash_deltas"] = std::move(cash);
  json held = json::array();
  for (const auto& [participant, units] : engine.holdings()) {
    json f;
    f["participant"] = participant;
    f["units"] = units;
    held.push_back(std::move(f));
  }
  result["holdings"] = std::move(held);
  put_money(result, "discount_sink", engine.discount_sink());
  result["warnings"] = engine.warnings();

  json options = json::array();
  for (const auto& [leader, option] : engine.options()) {
    json o;
    o["leader"] = leader;
    o["price"] = option.price;
    o["status"] = option.status == OptionStatus::sold      ? "sold"
                  : option.status == OptionStatus::expired ? "expired"
                                                           : "open";
    if (option.buyer.has_value()) o["buyer"] = *option.buyer;
    options.push_back(std::move(o));
  }
  result["options"] = std::move(options);
  return result;
}

// ------------------------------------------------------------------ verify

struct VerifyOutcome {
  json result;
  bool all_ok = true;
};

json stackelberg_witness_json(const StackelbergCheck& check) {
  json w;
  w["player"] = check.player;
  w["deviation"] = check.deviation.p;
  put_money(w, "utility_before", check.utility_before);
  put_money(w, "utility_after", check.utility_after);
  w["reason"] = check.reason;
  return w;
}

// verify_stackelberg + verify_nash on a two-player profile.
void verify_2p_instance(Valuation v0, Valuation v1, std::int64_t m1, Bid p0,
                        Bid p1, int bound, json& checks, bool& all_ok) {
  const BidBound bb(bound);
  const ProfileUtility follower_u = [v0, m1](Bid f, const std::vector<Bid>& l) {
    return follower_utility(f, l[0], v0, m1);
  };
  const std::vector<ProfileUtility> leader_us = {
      [v1, m1](Bid f, const std::vector<Bid>& l) {
        return leader_utility(f, l[0], v1, m1);
      }};
  const StackelbergCheck se =
      verify_stackelberg({p1}, p0, follower_u, leader_us, bb);

  json se_check;
  se_check["check"] = "stackelberg";
  se_check["instance"] = {{"v0", v0.v}, {"v1", v1.v}, {"m1", m1},
                          {"p0", p0.p}, {"p1", p1.p}, {"bound", bound}};
  se_check["ok"] = se.is_equilibrium;
  if (!se.is_equilibrium) {
    se_check["witness"] = stackelberg_witness_json(se);
    all_ok = false;
  }
  checks.push_back(std::move(se_check));

  const std::vector<std::function<HalfUnits(const std::vector<Bid>&)>> us = {
      [v0, m1](const std::vector<Bid>& p) {
        return follower_utility(p[0], p[1], v0, m1);
      },
      [v1, m1](const std::vector<Bid>& p) {
        return leader_utility(p[0], p[1], v1, m1);
      }};
  const NashCheck nash = verify_nash({p0, p1}, us, bb);
  json nash_check;
  nash_check["check"] = "nash";
  nash_check["instance"] = {{"v0", v0.v}, {"v1", v1.v}, {"m1", m1},
                            {"p0", p0.p}, {"p1", p1.p}, {"bound", bound}};
  nash_check["ok"] = nash.is_nash;
  if (!nash.is_nash) {
    json w;
    w["player"] = nash.witness->player;
    w["from"] = nash.witness->from.p;
    w["to"] = nash.witness->to.p;
    put_money(w, "utility_before", nash.witness->utility_before);
    put_money(w, "utility_after", nash.witness->utility_after);
    nash_check["witness"] = std::move(w);
    all_ok = false;
  }
  checks.push_back(std::move(nash_check));
}

VerifyOutcome run_verify(const json& config, std::uint64_t seed,
                         std::optional<int> bound_flag) {
  const std::string target =
      config.contains("target") ? as_string(config, "target") : "solve2p";
  VerifyOutcome out;
  json checks = json::array();

  if (target == "solve2p") {
    const std::int64_t m1 = as_int_or(config, "m1", 1);
    if (config.contains("grid")) {
      const json& grid = config.at("grid");
      if (!grid.is_array() || grid.size() != 2) {
        bad_config("\"grid\" must be [lo, hi]");
      }
      const int lo = grid[0].get<int>();
      const int hi = grid[1].get<int>();
      if (lo < 1 || hi < lo) bad_config("grid bounds must satisfy 1 <= lo <= hi");
      for (int a = lo; a <= hi; ++a) {
        for (int b = lo; b <= hi; ++b) {
          const Valuation v0(a);
          const Valuation v1(b);
          const EquilibriumProfile2P eq = solve_se(v0, v1, m1);
          const int bound = bound_flag.value_or(std::max(a, b) + 2);
          verify_2p_instance(v0, v1, m1, eq.p0, eq.p1, bound, checks,
                             out.all_ok);
        }
      }
    } else {
      const Valuation v0 = valuation_of(config, "v0");
      const Valuation v1 = valuation_of(config, "v1");
      Bid p0(0);
      Bid p1(0);
      if (config.contains("profile")) {
        const json& profile = config.at("profile");
        p0 = bid_of(profile, "p0");
        p1 = bid_of(profile, "p1");
      } else {
        const EquilibriumProfile2P eq = solve_se(v0, v1, m1);
        p0 = eq.p0;
        p1 = eq.p1;
      }
      const int bound = bound_flag.value_or(
          std::max({v0.v, v1.v, p0.p, p1.p}) + 2);
      verify_2p_instance(v0, v1, m1, p0, p1, bound, checks, out.all_ok);
    }
  } else if (target == "multi") {
    const Valuation v0 = valuation_of(config, "v0");
    const std::vector<LeaderHolding> holdings = parse_holdings(config);
    const MultiEquilibrium eq = solve_multiplayer_se(v0, holdings);

    BidProfile profile = eq.profile;
    if (config.contains("profile")) {
      const json& pj = config.at("profile");
      profile.p0 = bid_of(pj, "p0");
      const json& lb = require_field(pj, "leader_bids");
      if (!lb.is_array() || lb.size() != holdings.size()) {
        bad_config("\"leader_bids\" must list one bid per leader");
      }
      profile.leader_bids.clear();
      for (const json& b : lb) profile.leader_bids.push_back(Bid(b.get<int>()));
    }

    int max_relevant = v0.v;
    for (const LeaderHolding& h : holdings) {
      max_relevant = std::max(max_relevant, h.value.v);
    }
    for (const Bid& b : profile.leader_bids) {
      max_relevant = std::max(max_relevant, b.p);
    }
    const int bound = bound_flag.value_or(max_relevant + 2);

    // The breakpoint-scan best response to the closed-form leader bids must
    // be exactly v0.
    const Bid br = follower_best_response(eq.profile.leader_bids, holdings, v0);
    json br_check;
    br_check["check"] = "follower_best_response_equals_v0";
    br_check["instance"] = {{"v0", v0.v}, {"bound", bound}};
    br_check["ok"] = br.p == v0.v;
    if (br.p != v0.v) {
      br_check["witness"] = {{"best_response", br.p}};
      out.all_ok = false;
    }
    checks.push_back(std::move(br_check));

    const ProfileUtility follower_u = [&holdings, v0](
                                          Bid f, const std::vector<Bid>& l) {
      return follower_total_utility(f, l, holdings, v0);
    };
    std::vector<ProfileUtility> leader_us;
    for (std::size_t i = 0; i < holdings.size(); ++i) {
      leader_us.push_back([&holdings, i, v0](Bid f, const std::vector<Bid>& l) {
        return pairwise_outcome(holdings[i].units, v0, holdings[i].value, f,
                                l[i])
            .u_leader;
      });
    }
    const StackelbergCheck se = verify_stackelberg(
        profile.leader_bids, profile.p0, follower_u, leader_us, BidBound(bound));
    json se_check;
    se_check["check"] = "stackelberg";
    se_check["instance"] = {{"v0", v0.v},
                            {"p0", profile.p0.p},
                            {"leaders", holdings.size()},
                            {"bound", bound}};
    se_check["ok"] = se.is_equilibrium;
    if (!se.is_equilibrium) {
      se_check["witness"] = stackelberg_witness_json(se);
      out.all_ok = false;
    }
    checks.push_back(std::move(se_check));
  } else if (target == "bayes") {
    const Valuation v1 = valuation_of(config, "v1");
    const std::int64_t m1 = as_int_or(config, "m1", 1);
    const int count = static_cast<int>(as_int_or(config, "count", 50));
    const int max_support =
        static_cast<int>(as_int_or(config, "max_support", 6));
    const int max_value = static_cast<int>(as_int_or(config, "max_value", 12));
    DeterministicRng rng(seed);
    for (int c = 0; c < count; ++c) {
      const DiscreteValueDistribution dist =
          random_distribution(rng, max_support, max_value);
      const Bid closed = optimal_bayesian_leader_bid(v1, dist, m1);
      const int bound =
          bound_flag.value_or(dist.support.back().v + 2);
      // Exhaustive argmax of the expected utility; smallest maximizer.
      Bid oracle(0);
      Rational best = expected_leader_utility(Bid(0), v1, dist, m1);
      for (int p = 1; p <= bound; ++p) {
        const Rational e = expected_leader_utility(Bid(p), v1, dist, m1);
        if (e > best) {
          best = e;
          oracle = Bid(p);
        }
      }
      const std::vector<Bid> candidates = bayesian_candidate_bids(dist);
      const bool in_candidates =
          std::find(candidates.begin(), candidates.end(), closed) !=
          candidates.end();
      const bool ok = closed == oracle && in_candidates;
      json check;
      check["check"] = "bayes_closed_form_vs_oracle";
      json support = json::array();
      for (const Valuation& v : dist.support) support.push_back(v.v);
      check["instance"] = {{"case", c}, {"support", std::move(support)},
                           {"v1", v1.v}, {"m1", m1}, {"bound", bound}};
      check["ok"] = ok;
      if (!ok) {
        check["witness"] = {{"closed_form", closed.p}, {"oracle", oracle.p}};
        out.all_ok = false;
      }
      checks.push_back(std::move(check));
    }
  } else if (target == "repeated_deviation") {
    const Valuation v0 = valuation_of(config, "v0");
    const Valuation v1 = valuation_of(config, "v1");
    if (v0 == v1) bad_config("values must differ");
    const std::int64_t M = as_int(config, "M");
    const std::int64_t m0 = as_int(config, "m0");
    const int horizon = static_cast<int>(as_int_or(config, "horizon", 10));
    const int bound = bound_flag.value_or(
        static_cast<int>(as_int_or(config, "bound", 7)));
    const auto witness = bounded_deviation_search(
        v0, v1, M, m0, equilibrium_strategy(0, v0, v1),
        equilibrium_strategy(1, v0, v1), horizon, BidBound(bound));
    json check;
    check["check"] = "no_profitable_markov_deviation";
    check["instance"] = {{"v0", v0.v}, {"v1", v1.v}, {"M", M},
                         {"m0", m0},   {"horizon", horizon},
                         {"bound", bound}};
    check["ok"] = !witness.has_value();
    if (witness.has_value()) {
      json w;
      w["player"] = witness->player;
      json table = json::array();
      for (const Bid& b : witness->bid_table) table.push_back(b.p);
      w["bid_table"] = std::move(table);
      put_money(w, "baseline_utility", witness->baseline_utility);
      put_money(w, "improved_utility", witness->improved_utility);
      check["witness"] = std::move(w);
      out.all_ok = false;
    }
    checks.push_back(std::move(check));
  } else {
    bad_config("unknown verify target \"" + target + "\"");
  }

  out.result["checks"] = std::move(checks);
  out.result["all_ok"] = out.all_ok;
  return out;
}

// ------------------------------------------------------------------- sweep

std::pair<int, int> parse_range(const json& config, const char* key) {
  const json& r = require_field(config, key);
  if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
      !r[1].is_number_integer()) {
    bad_config(std::string("\"") + key + "\" must be [lo, hi]");
  }
  return {r[0].get<int>(), r[1].get<int>()};
}

std::string run_sweep(const json& config, std::uint64_t seed) {
  const std::string target = as_string(config, "target");
  const std::int64_t max_points = as_int_or(config, "max_points", 1000000);
  std::ostringstream csv;

  if (target == "solve2p") {
    const auto [v0_lo, v0_hi] = parse_range(config, "v0");
    const auto [v1_lo, v1_hi] = parse_range(config, "v1");
    const std::int64_t m1 = as_int_or(config, "m1", 1);
    csv << "v0,v1,m1,p0,p1,u0_halves,u1_halves\n";
    const std::int64_t rows =
        std::max<std::int64_t>(0, v0_hi - v0_lo + 1) *
        std::max<std::int64_t>(0, v1_hi - v1_lo + 1);
    if (rows > max_points) {
      throw Error(Errc::range_too_large,
                  std::to_string(rows) + " grid points > max_points " +
                      std::to_string(max_points));
    }
    for (int a = v0_lo; a <= v0_hi; ++a) {
      for (int b = v1_lo; b <= v1_hi; ++b) {
        if (a < 1 || b < 1) bad_config("sweep values must be >= 1");
        const EquilibriumProfile2P eq =
            solve_se(Valuation(a), Valuation(b), m1);
        csv << a << ',' << b << ',' << m1 << ',' << eq.p0.p << ','
            << eq.p1.p << ',' << eq.u0.halves() << ',' << eq.u1.halves()
            << '\n';
      }
    }
  } else if (target == "bayes") {
    const Valuation v1 = valuation_of(config, "v1");
    const std::int64_t m1 = as_int_or(config, "m1", 1);
    const int count = static_cast<int>(as_int_or(config, "count", 50));
    const int max_support =
        static_cast<int>(as_int_or(config, "max_support", 6));
    const int max_value = static_cast<int>(as_int_or(config, "max_value", 12));
    if (count > max_points) {
      throw Error(Errc::range_too_large, "count > max_points");
    }
    csv << "case,support,probs,v1,m1,closed_form,oracle_min,in_candidates,"
           "match\n";
    DeterministicRng rng(seed);
    for (int c = 0; c < count; ++c) {
      const DiscreteValueDistribution dist =
          random_distribution(rng, max_support, max_value);
      const Bid closed = optimal_bayesian_leader_bid(v1, dist, m1);
      const int bound = dist.support.back().v + 2;
      Bid oracle(0);
      Rational best = expected_leader_utility(Bid(0), v1, dist, m1);
      for (int p = 1; p <= bound; ++p) {
        const Rational e = expected_leader_utility(Bid(p), v1, dist, m1);
        if (e > best) {
          best = e;
          oracle = Bid(p);
        }
      }
      const std::vector<Bid> candidates = bayesian_candidate_bids(dist);
      const bool in_candidates =
          std::find(candidates.begin(), candidates.end(), closed) !=
          candidates.end();

      std::string support;
      std::string probs;
      for (std::size_t i = 0; i < dist.support.size(); ++i) {
        if (i) {
          support += '|';
          probs += '|';
        }
        support += std::to_string(dist.support[i].v);
        probs += dist.probs[i].to_string();
      }
      csv << c << ',' << support << ',' << probs << ',' << v1.v << ',' << m1
          << ',' << closed.p << ',' << oracle.p << ','
          << (in_candidates ? 1 : 0) << ',' << (closed == oracle ? 1 : 0)
          << '\n';
    }
  } else {
    bad_config("unknown sweep target \"" + target + "\"");
  }
  return csv.str();
}

}  // namespace

RunResult run_config(const json& original_config, const RunFlags& flags) {
  RunResult result;
  try {
    if (!original_config.is_object()) {
      bad_config("config must be a JSON object");
    }
    json config = original_config;
    const std::string kind = as_string(config, "kind");
    if (flags.expect_kind.has_value() && kind != *flags.expect_kind) {
      bad_config("config kind \"" + kind + "\" does not match subcommand \"" +
                 *flags.expect_kind + "\"");
    }
    if (flags.grid.has_value()) {
      if (kind != "verify") bad_config("--grid applies to verify only");
      if (*flags.grid < 1) bad_config("--grid must be >= 1");
      config["grid"] = json::array({1, *flags.grid});
    }

    const std::uint64_t seed = flags.seed.value_or(
        static_cast<std::uint64_t>(as_int_or(config, "seed", 0)));
    std::optional<int> bound = flags.bound;
    if (!bound.has_value() && config.contains("bound")) {
      bound = static_cast<int>(as_int(config, "bound"));
    }

    if (flags.format.has_value()) {
      const bool wants_csv = *flags.format == "csv";
      const bool is_sweep = kind == "sweep";
      if (*flags.format != "csv" && *flags.format != "json") {
        bad_config("format must be \"json\" or \"csv\"");
      }
      if (wants_csv != is_sweep) {
        bad_config(is_sweep ? "sweep reports are csv"
                            : "only sweep reports support csv");
      }
    }

    if (kind == "sweep") {
      result.output = run_sweep(config, seed);
      return result;
    }

    json report;
    report["artifact"] = {{"name", kArtifactName},
                          {"version", kArtifactVersion}};
    report["kind"] = kind;
    report["seed"] = seed;
    report["config"] = config;

    if (kind == "solve2p") {
      report["result"] = run_solve2p(config);
    } else if (kind == "bayes") {
      report["result"] = run_bayes(config);
    } else if (kind == "repeated") {
      report["result"] = run_repeated(config);
    } else if (kind == "multi") {
      report["result"] = run_multi(config);
    } else if (kind == "settle") {
      report["result"] = run_settle(config);
    } else if (kind == "verify") {
      const VerifyOutcome outcome = run_verify(config, seed, bound);
      report["result"] = outcome.result;
      if (!outcome.all_ok) result.exit_code = kExitFalsified;
    } else {
      bad_config("unknown kind \"" + kind + "\"");
    }

    result.output = report.dump(2) + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = kExitValidation;
    result.error = e.what();
    return result;
  } catch (const json::exception& e) {
    result.exit_code = kExitValidation;
    result.error = std::string("MalformedConfig: ") + e.what();
    return result;
  }
}

nlohmann::json ledger_snapshot(const LedgerState& ledger) {
  json nfts = json::array();
  for (const auto& [token, record] : ledger.nfts) {
    json r;
    r["token"] = token.id;
    r["owner"] = record.owner.id;
    r["frozen"] = record.frozen;
    nfts.push_back(std::move(r));
  }
  json books = json::array();
  for (const auto& [token, book] : ledger.books) {
    json b;
    b["token"] = token.id;
    b["total_supply"] = book.total_supply;
    json balances = json::array();
    for (const auto& [addr, units] : book.balances) {
      balances.push_back({{"address", addr.id}, {"units", units}});
    }
    b["balances"] = std::move(balances);
    books.push_back(std::move(b));
  }
  json out;
  out["nfts"] = std::move(nfts);
  out["books"] = std::move(books);
  return out;
}

int run(const std::string& config_path, const std::string& out_path,
        const RunFlags& flags) {
  json config;
  {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "IoFailure: cannot read config " << config_path << "\n";
      return kExitValidation;
    }
    try {
      in >> config;
    } catch (const json::exception& e) {
      std::cerr << "MalformedConfig: " << config_path << ": " << e.what()
                << "\n";
      return kExitValidation;
    }
  }

  const RunResult result = run_config(config, flags);
  if (!result.error.empty()) {
    std::cerr << result.error << "\n";
  }
  if (!result.output.empty()) {
    if (out_path.empty() || out_path == "-") {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "IoFailure: cannot write " << out_path << "\n";
        return kExitValidation;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace absnft::scenario
