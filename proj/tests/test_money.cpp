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

#include "absnft/money.hpp"
#include "absnft/rational.hpp"
#include "absnft/rng.hpp"

using namespace absnft;

TEST_CASE("half-unit money is exact and renders cleanly") {
  CHECK(HalfUnits::from_units(3).halves() == 6);
  CHECK(HalfUnits::from_halves(5).to_string() == "2.5");
  CHECK(HalfUnits::from_halves(-1).to_string() == "-0.5");
  CHECK(HalfUnits::from_halves(-5).to_string() == "-2.5");
  CHECK(HalfUnits::from_halves(4).to_string() == "2");
  CHECK(HalfUnits::from_halves(0).to_string() == "0");
  CHECK(HalfUnits::from_halves(5).is_whole() == false);
  CHECK((HalfUnits::from_units(2) - HalfUnits::from_halves(1)).halves() == 3);
  CHECK((HalfUnits::from_halves(3) * 4).halves() == 12);
  CHECK(HalfUnits::from_halves(1) > HalfUnits());
}

TEST_CASE("valuations start at one, bids at zero") {
  CHECK_THROWS_AS(Valuation(0), Error);
  CHECK_THROWS_AS(Bid(-1), Error);
  CHECK(Valuation(1).v == 1);
  CHECK(Bid(0).p == 0);
}

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).num() == -1);
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK_THROWS_AS(Rational(1, 0), Error);

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0, 1));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(4, 2).to_string() == "2");
}

TEST_CASE("seeded rng reproduces its stream") {
  DeterministicRng a(42);
  DeterministicRng b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.uniform(0, 12) == b.uniform(0, 12));
  }
  DeterministicRng c(43);
  bool diverged = false;
  DeterministicRng a2(42);
  for (int i = 0; i < 100; ++i) {
    if (a2.next_u64() != c.next_u64()) diverged = true;
  }
  CHECK(diverged);

  DeterministicRng d(7);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t x = d.uniform(-3, 9);
    CHECK(x >= -3);
    CHECK(x <= 9);
  }
}
