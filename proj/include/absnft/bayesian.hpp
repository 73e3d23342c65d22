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
#include <vector>

#include "absnft/money.hpp"
#include "absnft/rational.hpp"
#include "absnft/rng.hpp"
#include "absnft/stackelberg2p.hpp"

namespace absnft {

// Incomplete-information leader problem: the leader N1 knows only a finite
// prior over the follower's per-unit value. Probabilities are exact
// rationals end to end; there is no floating point on this path.

struct DiscreteValueDistribution {
  std::vector<Valuation> support;  // strictly ascending
  std::vector<Rational> probs;     // positive, sum exactly to 1

  // Throws InvalidArgument unless the invariants above hold.
  void validate() const;

  static DiscreteValueDistribution point(Valuation v);
};

// Expected leader utility of bidding p1 against the prior, in half-unit
// scale: support values >= p1 yield m1*(p1 - v1) per unit of probability,
// values <= p1-1 yield m1*(v1 - p1 + 1/2).
Rational expected_leader_utility(Bid p1, Valuation v1,
                                 const DiscreteValueDistribution& dist,
                                 std::int64_t m1);

// Candidate optimal bids: every support value and its successor. The
// expected utility is piecewise linear between support points, so the
// smallest global maximizer always lies in this set.
std::vector<Bid> bayesian_candidate_bids(const DiscreteValueDistribution& dist);

// Smallest bid maximizing expected_leader_utility.
Bid optimal_bayesian_leader_bid(Valuation v1,
                                const DiscreteValueDistribution& dist,
                                std::int64_t m1);

// All tied maximizers among the candidates, ascending. Reported by the CLI
// in verbose output; existence of an optimum is guaranteed, uniqueness is
// not.
std::vector<Bid> bayesian_tied_optimal_bids(Valuation v1,
                                            const DiscreteValueDistribution& dist,
                                            std::int64_t m1);

// Equilibrium of the Bayesian game once the follower's actual value is
// fixed: the leader plays the prior-optimal bid, the follower best-responds
// with complete information about its own value. Utilities are realized
// (not expected), computed at actual_v0.
EquilibriumProfile2P bayesian_se(Valuation actual_v0, Valuation v1,
                                 const DiscreteValueDistribution& dist,
                                 std::int64_t m1);

// Seeded random prior: up to max_support_size distinct values in
// [1..max_value] with weights drawn in [1..9] and normalized exactly. Used
// by both the CLI sweeps and the verification suites, so samples match for
// equal seeds.
DiscreteValueDistribution random_distribution(DeterministicRng& rng,
                                              int max_support_size,
                                              int max_value);

}  // namespace absnft
