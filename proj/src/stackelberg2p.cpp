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

#include "absnft/stackelberg2p.hpp"

namespace absnft {

HalfUnits follower_utility(Bid p0, Bid p1, Valuation v0, std::int64_t m1) {
  // N0 plays the follower seat of the pairwise deal; vi only affects the
  // leader's side, so any placeholder value works here.
  return pairwise_outcome(m1, v0, Valuation(1), p0, p1).u_follower;
}

HalfUnits leader_utility(Bid p0, Bid p1, Valuation v1, std::int64_t m1) {
  return pairwise_outcome(m1, Valuation(1), v1, p0, p1).u_leader;
}

Bid best_response_follower(Bid p1, Valuation v0) {
  if (p1.p >= v0.v + 1) return Bid(p1.p - 1);
  return p1;
}

Bid optimal_leader_bid(Valuation v0, Valuation v1) {
  if (v1.v <= v0.v) return Bid(v0.v);
  return Bid(v0.v + 1);
}

EquilibriumProfile2P solve_se(Valuation v0, Valuation v1, std::int64_t m1) {
  const Bid p1 = optimal_leader_bid(v0, v1);
  const Bid p0 = best_response_follower(p1, v0);
  const PairwiseOutcome deal = pairwise_outcome(m1, v0, v1, p0, p1);
  return EquilibriumProfile2P{p0, p1, deal.u_follower, deal.u_leader};
}

}  // namespace absnft
