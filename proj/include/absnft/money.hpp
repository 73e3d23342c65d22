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

#include <compare>
#include <cstdint>
#include <string>

#include "absnft/error.hpp"

namespace absnft {

// Exact money type: a signed count of *half* currency units. Every price in
// the repurchase mechanism is either an integer bid or a bid midpoint
// (p0+pi)/2, and the failed-trade discount is exactly 1/2, so all monetary
// quantities in the library are integers in this scale. No floating point
// is used anywhere on a payoff or equilibrium path.
class HalfUnits {
 public:
  constexpr HalfUnits() = default;

  static constexpr HalfUnits from_halves(std::int64_t halves) {
    return HalfUnits(halves);
  }
  static constexpr HalfUnits from_units(std::int64_t units) {
    return HalfUnits(2 * units);
  }

  constexpr std::int64_t halves() const { return halves_; }

  // True when the amount is a whole number of currency units.
  constexpr bool is_whole() const { return halves_ % 2 == 0; }

  // Renders "7", "-3" or "4.5", "-0.5"; exact, never a float round-trip.
  std::string to_string() const;

  friend constexpr HalfUnits operator+(HalfUnits a, HalfUnits b) {
    return HalfUnits(a.halves_ + b.halves_);
  }
  friend constexpr HalfUnits operator-(HalfUnits a, HalfUnits b) {
    return HalfUnits(a.halves_ - b.halves_);
  }
  constexpr HalfUnits operator-() const { return HalfUnits(-halves_); }
  friend constexpr HalfUnits operator*(HalfUnits a, std::int64_t k) {
    return HalfUnits(a.halves_ * k);
  }
  friend constexpr HalfUnits operator*(std::int64_t k, HalfUnits a) {
    return a * k;
  }
  HalfUnits& operator+=(HalfUnits b) {
    halves_ += b.halves_;
    return *this;
  }
  HalfUnits& operator-=(HalfUnits b) {
    halves_ -= b.halves_;
    return *this;
  }

  friend constexpr auto operator<=>(HalfUnits, HalfUnits) = default;

 private:
  explicit constexpr HalfUnits(std::int64_t halves) : halves_(halves) {}

  std::int64_t halves_ = 0;
};

// Per-unit private value estimate, an integer in {1, 2, ...}.
struct Valuation {
  explicit Valuation(int value) : v(value) {
    if (value < 1) {
      throw Error(Errc::invalid_argument,
                  "valuation must be a positive integer, got " +
                      std::to_string(value));
    }
  }
  int v;

  friend auto operator<=>(Valuation, Valuation) = default;
};

// A bid, an integer in {0, 1, ...}.
struct Bid {
  explicit Bid(int price) : p(price) {
    if (price < 0) {
      throw Error(Errc::invalid_argument,
                  "bid must be non-negative, got " + std::to_string(price));
    }
  }
  int p;

  friend auto operator<=>(Bid, Bid) = default;
};

}  // namespace absnft
