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
#include <string>

#include "absnft/error.hpp"

namespace absnft {

// State machine for complete NFTs (CNFT) and their securitized share books
// (SNFT). Securitizing freezes the complete token in escrow and mints a
// fixed supply of fungible shares under the same token id; restruction burns
// a sole holder's full supply and releases the complete token back to them.
//
// All operations are pure: they validate, then return a new LedgerState.
// A thrown Error leaves the original state untouched, so traces can be
// replayed and property-tested without defensive copying by callers.

struct Address {
  std::string id;

  friend auto operator<=>(const Address&, const Address&) = default;
};

// Escrow address holding every frozen complete NFT. Reserved: user-facing
// operations reject it as sender or recipient.
const Address& frozen_addr();

struct TokenId {
  std::uint64_t id = 0;

  friend auto operator<=>(TokenId, TokenId) = default;
};

struct CompleteNftRecord {
  TokenId token;
  Address owner;
  bool frozen = false;

  friend bool operator==(const CompleteNftRecord&,
                         const CompleteNftRecord&) = default;
};

// Share book of one securitized token. No zero-valued balance entries are
// ever stored, so `balances.size()` is the holder count.
struct BalanceBook {
  TokenId token;
  std::int64_t total_supply = 0;
  std::map<Address, std::int64_t> balances;

  friend bool operator==(const BalanceBook&, const BalanceBook&) = default;
};

struct LedgerState {
  std::map<TokenId, CompleteNftRecord> nfts;
  std::map<TokenId, BalanceBook> books;

  friend bool operator==(const LedgerState&, const LedgerState&) = default;
};

// Registers a fresh, unfrozen complete NFT. Errors: DuplicateToken,
// ReservedAddress.
LedgerState register_cnft(const LedgerState& ledger, TokenId token,
                          const Address& owner);

// Freezes the complete NFT and mints `amount` shares to `recipient`.
// Errors: UnknownToken, NotOwner, AlreadySecuritized, ZeroAmount,
// ReservedAddress.
LedgerState securitize(const LedgerState& ledger, const Address& sender,
                       const Address& recipient, TokenId token,
                       std::int64_t amount);

// Moves `amount` shares between holders. Errors: UnknownToken,
// InsufficientBalance, ZeroAmount, ReservedAddress.
LedgerState snft_transfer(const LedgerState& ledger, const Address& from,
                          const Address& to, TokenId token,
                          std::int64_t amount);

// Transfers an unfrozen complete NFT. Errors: UnknownToken, NotOwner,
// Frozen, ReservedAddress.
LedgerState cnft_transfer(const LedgerState& ledger, const Address& from,
                          const Address& to, TokenId token);

// Burns the full supply held by `sender` and hands the unfrozen complete
// NFT to `recipient`. Errors: UnknownToken, NotSoleHolder, ReservedAddress.
LedgerState restruct(const LedgerState& ledger, const Address& sender,
                     const Address& recipient, TokenId token);

// True iff `holder` owns a strict majority of the shares:
// 2 * balance > total_supply. Errors: UnknownToken.
bool can_trigger_repurchase(const LedgerState& ledger, const Address& holder,
                            TokenId token);

// Internal consistency check used by tests: balance sums, freeze coupling,
// zero-entry hygiene, book/NFT pairing. Throws on violation.
void check_ledger_invariants(const LedgerState& ledger);

}  // namespace absnft
