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

#include "absnft/mechanism.hpp"

namespace absnft {

PairwiseOutcome pairwise_outcome(std::int64_t units, Valuation v0,
                                 Valuation vi, Bid p0, Bid pi) {
  if (units < 1) {
    throw Error(Errc::invalid_argument, "deal over zero units");
  }
  // All arithmetic in half-units: a midpoint (p0+pi)/2 is p0+pi halves.
  const std::int64_t mid = p0.p + pi.p;
  PairwiseOutcome out{};
  if (p0 >= pi) {
    out.direction = TradeDirection::follower_buys;
    out.unit_price = HalfUnits::from_halves(mid);
    out.seller_unit_revenue = out.unit_price;
    out.u_follower = HalfUnits::from_halves((2 * v0.v - mid) * units);
    out.u_leader = HalfUnits::from_halves((mid - 2 * vi.v) * units);
  } else {
    out.direction = TradeDirection::leader_buys;
    out.unit_price = HalfUnits::from_halves(mid);
    out.seller_unit_revenue = HalfUnits::from_halves(mid - 1);
    out.u_follower = HalfUnits::from_halves((mid - 1 - 2 * v0.v) * units);
    out.u_leader = HalfUnits::from_halves((2 * vi.v - mid) * units);
  }
  return out;
}

HalfUnits utility_sum(std::int64_t units, Valuation v0, Valuation vi, Bid p0,
                      Bid pi) {
  if (units < 1) {
    throw Error(Errc::invalid_argument, "deal over zero units");
  }
  if (p0 >= pi) {
    return HalfUnits::from_halves(2 * units * (v0.v - vi.v));
  }
  return HalfUnits::from_halves(2 * units * (vi.v - v0.v) - units);
}

HalfUnits utility_sum_max(std::int64_t units, Valuation v0, Valuation vi) {
  if (v0.v >= vi.v) {
    return HalfUnits::from_halves(2 * units * (v0.v - vi.v));
  }
  return HalfUnits::from_halves(2 * units * (vi.v - v0.v) - units);
}

}  // namespace absnft
