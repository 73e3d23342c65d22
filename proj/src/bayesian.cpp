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

#include "absnft/bayesian.hpp"

#include <algorithm>

namespace absnft {

void DiscreteValueDistribution::validate() const {
  if (support.empty()) {
    throw Error(Errc::invalid_argument, "empty distribution support");
  }
  if (support.size() != probs.size()) {
    throw Error(Errc::invalid_argument,
                "support and probability counts differ");
  }
  for (std::size_t i = 1; i < support.size(); ++i) {
    if (!(support[i - 1] < support[i])) {
      throw Error(Errc::invalid_argument,
                  "support must be strictly ascending");
    }
  }
  Rational total(0, 1);
  for (const Rational& p : probs) {
    if (!(p > Rational(0, 1))) {
      throw Error(Errc::invalid_argument, "probabilities must be positive");
    }
    total += p;
  }
  if (!(total == Rational(1, 1))) {
    throw Error(Errc::invalid_argument,
                "probabilities sum to " + total.to_string() + ", not 1");
  }
}

DiscreteValueDistribution DiscreteValueDistribution::point(Valuation v) {
  return DiscreteValueDistribution{{v}, {Rational(1, 1)}};
}

Rational expected_leader_utility(Bid p1, Valuation v1,
                                 const DiscreteValueDistribution& dist,
                                 std::int64_t m1) {
  // Each branch utility is an integer count of half-units, so the expected
  // value is a rational whose denominator divides the prior's.
  Rational expected(0, 1);
  for (std::size_t l = 0; l < dist.support.size(); ++l) {
    const int v0l = dist.support[l].v;
    std::int64_t halves;
    if (v0l >= p1.p) {
      halves = 2 * m1 * (p1.p - v1.v);
    } else {
      halves = 2 * m1 * (v1.v - p1.p) + m1;
    }
    expected += dist.probs[l] * Rational(halves, 1);
  }
  return expected;
}

std::vector<Bid> bayesian_candidate_bids(
    const DiscreteValueDistribution& dist) {
  std::vector<Bid> candidates;
  candidates.reserve(2 * dist.support.size());
  for (const Valuation& v : dist.support) {
    candidates.push_back(Bid(v.v));
    candidates.push_back(Bid(v.v + 1));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  return candidates;
}

std::vector<Bid> bayesian_tied_optimal_bids(
    Valuation v1, const DiscreteValueDistribution& dist, std::int64_t m1) {
  dist.validate();
  const std::vector<Bid> candidates = bayesian_candidate_bids(dist);
  Rational best = expected_leader_utility(candidates.front(), v1, dist, m1);
  for (const Bid& b : candidates) {
    const Rational e = expected_leader_utility(b, v1, dist, m1);
    if (e > best) best = e;
  }
  std::vector<Bid> tied;
  for (const Bid& b : candidates) {
    if (expected_leader_utility(b, v1, dist, m1) == best) tied.push_back(b);
  }
  return tied;
}

Bid optimal_bayesian_leader_bid(Valuation v1,
                                const DiscreteValueDistribution& dist,
                                std::int64_t m1) {
  return bayesian_tied_optimal_bids(v1, dist, m1).front();
}

EquilibriumProfile2P bayesian_se(Valuation actual_v0, Valuation v1,
                                 const DiscreteValueDistribution& dist,
                                 std::int64_t m1) {
  const Bid p1 = optimal_bayesian_leader_bid(v1, dist, m1);
  const Bid p0 = best_response_follower(p1, actual_v0);
  const PairwiseOutcome deal = pairwise_outcome(m1, actual_v0, v1, p0, p1);
  return EquilibriumProfile2P{p0, p1, deal.u_follower, deal.u_leader};
}

DiscreteValueDistribution random_distribution(DeterministicRng& rng,
                                              int max_support_size,
                                              int max_value) {
  if (max_support_size < 1 || max_value < 1 ||
      max_support_size > max_value) {
    throw Error(Errc::invalid_argument, "bad distribution shape bounds");
  }
  const int size = static_cast<int>(rng.uniform(1, max_support_size));

  // Distinct ascending support values.
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(max_value));
  for (int v = 1; v <= max_value; ++v) pool.push_back(v);
  for (int i = 0; i < size; ++i) {
    const auto j = rng.uniform(i, max_value - 1);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(size));
  std::sort(pool.begin(), pool.end());

  std::vector<std::int64_t> weights;
  std::int64_t total = 0;
  for (int i = 0; i < size; ++i) {
    weights.push_back(rng.uniform(1, 9));
    total += weights.back();
  }

  DiscreteValueDistribution dist;
  for (int i = 0; i < size; ++i) {
    dist.support.push_back(Valuation(pool[static_cast<std::size_t>(i)]));
    dist.probs.push_back(Rational(weights[static_cast<std::size_t>(i)], total));
  }
  dist.validate();
  return dist;
}

}  // namespace absnft
