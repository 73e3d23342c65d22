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

#include <stdexcept>
#include <string>

namespace absnft {

// Every failure mode of the library maps to one of these codes. Operations
// are pure: on error they throw and leave their inputs untouched.
enum class Errc {
  invalid_argument,

  // token ledger
  not_owner,
  already_securitized,
  zero_amount,
  insufficient_balance,
  frozen,
  not_sole_holder,
  unknown_token,
  reserved_address,
  duplicate_token,

  // games
  equal_holdings,
  empty_coalition,

  // settlement
  follower_budget_infeasible,
  budget_exceeded,
  option_not_open,
  buyer_budget_exceeded,
  settlement_phase,

  // oracle / cli
  search_space_too_large,
  range_too_large,
  malformed_config,
  io_failure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace absnft
