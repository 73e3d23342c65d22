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

#include "absnft/money.hpp"

#include "absnft/error.hpp"

namespace absnft {

std::string HalfUnits::to_string() const {
  const std::int64_t whole = halves_ / 2;
  if (halves_ % 2 == 0) return std::to_string(whole);
  std::string s = std::to_string(whole);
  if (halves_ < 0 && whole == 0) s = "-0";
  return s + ".5";
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
      return "InvalidArgument";
    case Errc::not_owner:
      return "NotOwner";
    case Errc::already_securitized:
      return "AlreadySecuritized";
    case Errc::zero_amount:
      return "ZeroAmount";
    case Errc::insufficient_balance:
      return "InsufficientBalance";
    case Errc::frozen:
      return "Frozen";
    case Errc::not_sole_holder:
      return "NotSoleHolder";
    case Errc::unknown_token:
      return "UnknownToken";
    case Errc::reserved_address:
      return "ReservedAddress";
    case Errc::duplicate_token:
      return "DuplicateToken";
    case Errc::equal_holdings:
      return "EqualHoldings";
    case Errc::empty_coalition:
      return "EmptyCoalition";
    case Errc::follower_budget_infeasible:
      return "FollowerBudgetInfeasible";
    case Errc::budget_exceeded:
      return "BudgetExceeded";
    case Errc::option_not_open:
      return "OptionNotOpen";
    case Errc::buyer_budget_exceeded:
      return "BuyerBudgetExceeded";
    case Errc::settlement_phase:
      return "SettlementPhase";
    case Errc::search_space_too_large:
      return "SearchSpaceTooLarge";
    case Errc::range_too_large:
      return "RangeTooLarge";
    case Errc::malformed_config:
      return "MalformedConfig";
    case Errc::io_failure:
      return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace absnft
