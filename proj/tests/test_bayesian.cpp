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

#include <algorithm>

#include "absnft/bayesian.hpp"
#include "absnft/oracle.hpp"

using namespace absnft;

namespace {

DiscreteValueDistribution two_point_half_half() {
  return DiscreteValueDistribution{{Valuation(2), Valuation(4)},
                                   {Rational(1, 2), Rational(1, 2)}};
}

}  // namespace

TEST_CASE("distribution validation") {
  CHECK_NOTHROW(two_point_half_half().validate());

  DiscreteValueDistribution bad_sum{{Valuation(2), Valuation(4)},
                                    {Rational(1, 2), Rational(1, 3)}};
  CHECK_THROWS_AS(bad_sum.validate(), Error);

  DiscreteValueDistribution unsorted{{Valuation(4), Valuation(2)},
                                     {Rational(1, 2), Rational(1, 2)}};
  CHECK_THROWS_AS(unsorted.validate(), Error);

  DiscreteValueDistribution empty;
  CHECK_THROWS_AS(empty.validate(), Error);
}

TEST_CASE("expected utility in half-unit scale, hand-expanded") {
  const DiscreteValueDistribution dist = two_point_half_half();
  // Quoted in full units these are 1/4, -1 and -3/2.
  CHECK(expected_leader_utility(Bid(3), Valuation(3), dist, 1) ==
        Rational(1, 2));
  CHECK(expected_leader_utility(Bid(2), Valuation(3), dist, 1) ==
        Rational(-2, 1));
  CHECK(expected_leader_utility(Bid(5), Valuation(3), dist, 1) ==
        Rational(-3, 1));
}

TEST_CASE("smallest optimal bid, ties included") {
  const DiscreteValueDistribution dist = two_point_half_half();
  CHECK(optimal_bayesian_leader_bid(Valuation(3), dist, 1) == Bid(3));
  const std::vector<Bid> tied = bayesian_tied_optimal_bids(Valuation(3), dist, 1);
  REQUIRE(tied.size() == 2);
  CHECK(tied[0] == Bid(3));
  CHECK(tied[1] == Bid(4));

  // Point priors collapse to the complete-information optimum.
  CHECK(optimal_bayesian_leader_bid(
            Valuation(3), DiscreteValueDistribution::point(Valuation(5)), 1) ==
        Bid(5));
  CHECK(optimal_bayesian_leader_bid(
            Valuation(9), DiscreteValueDistribution::point(Valuation(5)), 1) ==
        Bid(6));
}

TEST_CASE("realized equilibrium against the actual follower value") {
  const DiscreteValueDistribution dist = two_point_half_half();
  const EquilibriumProfile2P low = bayesian_se(Valuation(2), Valuation(3), dist, 1);
  CHECK(low.p0 == Bid(2));
  CHECK(low.p1 == Bid(3));
  const EquilibriumProfile2P high = bayesian_se(Valuation(4), Valuation(3), dist, 1);
  CHECK(high.p0 == Bid(3));
  CHECK(high.p1 == Bid(3));
}

TEST_CASE("point priors reproduce the complete-information solver exactly") {
  for (int v0 = 1; v0 <= 10; ++v0) {
    for (int v1 = 1; v1 <= 10; ++v1) {
      const auto dist = DiscreteValueDistribution::point(Valuation(v0));
      CHECK(bayesian_se(Valuation(v0), Valuation(v1), dist, 2) ==
            solve_se(Valuation(v0), Valuation(v1), 2));
    }
  }
}

TEST_CASE("optimal bid always lies on a support value or its successor") {
  DeterministicRng rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const DiscreteValueDistribution dist = random_distribution(rng, 6, 12);
    const int v1 = static_cast<int>(rng.uniform(1, 12));
    const Bid star = optimal_bayesian_leader_bid(Valuation(v1), dist, 1);
    const std::vector<Bid> candidates = bayesian_candidate_bids(dist);
    CHECK(std::find(candidates.begin(), candidates.end(), star) !=
          candidates.end());
  }
}

TEST_CASE("candidate scan equals exhaustive maximization") {
  DeterministicRng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const DiscreteValueDistribution dist = random_distribution(rng, 6, 12);
    const int v1 = static_cast<int>(rng.uniform(1, 12));
    const std::int64_t m1 = rng.uniform(1, 4);
    const Bid closed = optimal_bayesian_leader_bid(Valuation(v1), dist, m1);

    const BidBound bound(dist.support.back().v + 2);
    const auto argmax = brute_best_response(
        [&](Bid p1) {
          return expected_leader_utility(p1, Valuation(v1), dist, m1);
        },
        bound);
    CHECK(closed == argmax.front());
  }
}

TEST_CASE("interval optimum follows the probability-mass threshold") {
  DeterministicRng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const DiscreteValueDistribution dist = random_distribution(rng, 5, 10);
    const int v1 = static_cast<int>(rng.uniform(1, 10));
    for (std::size_t l = 1; l < dist.support.size(); ++l) {
      Rational head(0, 1);
      Rational tail(0, 1);
      for (std::size_t h = 0; h < dist.probs.size(); ++h) {
        if (h < l) {
          head += dist.probs[h];
        } else {
          tail += dist.probs[h];
        }
      }
      // Maximum of the expected utility over the open-left interval
      // (support[l-1], support[l]].
      const int lo = dist.support[l - 1].v + 1;
      const int hi = dist.support[l].v;
      Rational best = expected_leader_utility(Bid(lo), Valuation(v1), dist, 1);
      for (int p = lo; p <= hi; ++p) {
        const Rational e =
            expected_leader_utility(Bid(p), Valuation(v1), dist, 1);
        if (e > best) best = e;
      }
      const Rational at_hi =
          expected_leader_utility(Bid(hi), Valuation(v1), dist, 1);
      const Rational at_lo =
          expected_leader_utility(Bid(lo), Valuation(v1), dist, 1);
      if (tail >= head) {
        CHECK(at_hi == best);
      }
      if (tail <= head) {
        CHECK(at_lo == best);
      }
    }
  }
}
