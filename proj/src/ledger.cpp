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

#include "absnft/ledger.hpp"

#include <numeric>

namespace absnft {

namespace {

void require_usable_address(const Address& addr, const char* what) {
  if (addr.id.empty()) {
    throw Error(Errc::invalid_argument, std::string(what) + " address empty");
  }
  if (addr == frozen_addr()) {
    throw Error(Errc::reserved_address,
                std::string(what) + " may not be the escrow address");
  }
}

const CompleteNftRecord& require_nft(const LedgerState& ledger,
                                     TokenId token) {
  auto it = ledger.nfts.find(token);
  if (it == ledger.nfts.end()) {
    throw Error(Errc::unknown_token, "token " + std::to_string(token.id));
  }
  return it->second;
}

const BalanceBook& require_book(const LedgerState& ledger, TokenId token) {
  auto it = ledger.books.find(token);
  if (it == ledger.books.end()) {
    throw Error(Errc::unknown_token,
                "no share book for token " + std::to_string(token.id));
  }
  return it->second;
}

}  // namespace

const Address& frozen_addr() {
  static const Address addr{"__frozen__"};
  return addr;
}

LedgerState register_cnft(const LedgerState& ledger, TokenId token,
                          const Address& owner) {
  require_usable_address(owner, "owner");
  if (ledger.nfts.contains(token)) {
    throw Error(Errc::duplicate_token, "token " + std::to_string(token.id));
  }
  LedgerState next = ledger;
  next.nfts[token] = CompleteNftRecord{token, owner, false};
  return next;
}

LedgerState securitize(const LedgerState& ledger, const Address& sender,
                       const Address& recipient, TokenId token,
                       std::int64_t amount) {
  require_usable_address(sender, "sender");
  require_usable_address(recipient, "recipient");
  const CompleteNftRecord& nft = require_nft(ledger, token);
  if (nft.frozen) {
    throw Error(Errc::already_securitized,
                "token " + std::to_string(token.id));
  }
  if (sender != nft.owner) {
    throw Error(Errc::not_owner, sender.id + " does not own token " +
                                     std::to_string(token.id));
  }
  if (amount < 1) {
    throw Error(Errc::zero_amount, "securitize amount must be >= 1");
  }

  LedgerState next = ledger;
  BalanceBook book;
  book.token = token;
  book.total_supply = amount;
  book.balances[recipient] = amount;
  next.books[token] = std::move(book);
  auto& rec = next.nfts[token];
  rec.owner = frozen_addr();
  rec.frozen = true;
  return next;
}

LedgerState snft_transfer(const LedgerState& ledger, const Address& from,
                          const Address& to, TokenId token,
                          std::int64_t amount) {
  require_usable_address(from, "from");
  require_usable_address(to, "to");
  const BalanceBook& book = require_book(ledger, token);
  if (amount < 1) {
    throw Error(Errc::zero_amount, "transfer amount must be >= 1");
  }
  auto holder = book.balances.find(from);
  const std::int64_t have =
      holder == book.balances.end() ? 0 : holder->second;
  if (have < amount) {
    throw Error(Errc::insufficient_balance,
                from.id + " holds " + std::to_string(have) + " < " +
                    std::to_string(amount));
  }

  LedgerState next = ledger;
  auto& balances = next.books[token].balances;
  balances[from] -= amount;
  if (balances[from] == 0) balances.erase(from);
  balances[to] += amount;
  return next;
}

LedgerState cnft_transfer(const LedgerState& ledger, const Address& from,
                          const Address& to, TokenId token) {
  require_usable_address(from, "from");
  require_usable_address(to, "to");
  const CompleteNftRecord& nft = require_nft(ledger, token);
  if (nft.frozen) {
    throw Error(Errc::frozen, "token " + std::to_string(token.id));
  }
  if (from != nft.owner) {
    throw Error(Errc::not_owner, from.id + " does not own token " +
                                     std::to_string(token.id));
  }
  LedgerState next = ledger;
  next.nfts[token].owner = to;
  return next;
}

LedgerState restruct(const LedgerState& ledger, const Address& sender,
                     const Address& recipient, TokenId token) {
  require_usable_address(sender, "sender");
  require_usable_address(recipient, "recipient");
  const BalanceBook& book = require_book(ledger, token);
  auto holder = book.balances.find(sender);
  const std::int64_t have =
      holder == book.balances.end() ? 0 : holder->second;
  if (book.total_supply == 0 || have != book.total_supply) {
    throw Error(Errc::not_sole_holder,
                sender.id + " holds " + std::to_string(have) + " of " +
                    std::to_string(book.total_supply));
  }

  LedgerState next = ledger;
  next.books.erase(token);
  auto& rec = next.nfts[token];
  rec.owner = recipient;
  rec.frozen = false;
  return next;
}

bool can_trigger_repurchase(const LedgerState& ledger, const Address& holder,
                            TokenId token) {
  const BalanceBook& book = require_book(ledger, token);
  auto it = book.balances.find(holder);
  const std::int64_t have = it == book.balances.end() ? 0 : it->second;
  return 2 * have > book.total_supply;
}

void check_ledger_invariants(const LedgerState& ledger) {
  for (const auto& [token, book] : ledger.books) {
    auto nft = ledger.nfts.find(token);
    if (nft == ledger.nfts.end()) {
      throw Error(Errc::unknown_token, "share book without complete NFT");
    }
    std::int64_t sum = 0;
    for (const auto& [addr, bal] : book.balances) {
      if (bal <= 0) {
        throw Error(Errc::invalid_argument,
                    "non-positive balance entry for " + addr.id);
      }
      sum += bal;
    }
    if (sum != book.total_supply) {
      throw Error(Errc::invalid_argument, "balance sum != total supply");
    }
    const bool live = book.total_supply > 0;
    if (live != nft->second.frozen ||
        live != (nft->second.owner == frozen_addr())) {
      throw Error(Errc::invalid_argument, "freeze coupling violated");
    }
  }
  for (const auto& [token, nft] : ledger.nfts) {
    if (nft.frozen && !ledger.books.contains(token)) {
      throw Error(Errc::invalid_argument, "frozen NFT without share book");
    }
  }
}

}  // namespace absnft
