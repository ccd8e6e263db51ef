// Copyright 2026 The OCF Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "ocf/core.hpp"
#include "ocf/deviations.hpp"
#include "ocf/random.hpp"
#include "ocf/reductions.hpp"
#include "oracles.hpp"

using namespace ocf;

namespace {

bool knapsack_member(std::vector<KnapsackItem> items, long capacity, long target) {
  const ReducedInstance r = knapsack_reduction({std::move(items), capacity, target});
  return ttg_membership(r.game, r.outcome).stable;
}

bool biclique_member(const BicliqueInstance& b) {
  const ReducedInstance r = biclique_reduction(b);
  return core_membership(Game(r.game), r.outcome, DeviationKind::kRefined).stable;
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("knapsack reduction") {
    CHECK_FALSE(knapsack_member({{5, 15}, {4, 10}}, 10, 30));
    CHECK(knapsack_member({{5, 15}, {4, 10}}, 10, 31));
    CHECK(knapsack_member({{1, 1}}, 2, 3));
    const ReducedInstance r = knapsack_reduction({{{5, 15}, {4, 10}}, 10, 31});
    CHECK(r.game.n() == 1);
    CHECK(r.game.weights()[0] == 10);
    CHECK(payoff_vector(r.outcome, 1) == PayoffVector{30});
  }

  TEST_CASE("knapsack normalization") {
    const KnapsackInstance k = normalize({{{3, 4}, {4, 3}, {12, 50}, {2, 0}}, 10, 20});
    REQUIRE(k.items.size() == 1);
    CHECK(k.items[0].size == 3);
    CHECK_THROWS_AS(normalize({{{3, 25}}, 10, 20}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({{{3, 4}}, 0, 20}), std::invalid_argument);
  }

  TEST_CASE("knapsack reduction matches enumeration") {
    Rng rng(71);
    for (int t = 0; t < 40; ++t) {
      KnapsackInstance k;
      k.capacity = uniform(rng, 2, 15);
      long top = 0;
      for (int i = 0; i < 3; ++i) {
        const long size = uniform(rng, 1, k.capacity.convert_to<long>() - 1);
        const long v = uniform(rng, 1, 10);
        top = std::max(top, v);
        k.items.push_back({size, v});
      }
      k.target = top + uniform(rng, 1, 20);
      const ReducedInstance r = knapsack_reduction(k);
      CHECK(ttg_membership(r.game, r.outcome).stable == !oracle::knapsack_yes(k));
    }
  }

  TEST_CASE("biclique reduction") {
    CHECK_FALSE(biclique_member({2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 4}));
    CHECK(biclique_member({2, 2, {{0, 0}, {1, 1}}, 2}));
    CHECK_FALSE(biclique_member({1, 1, {{0, 0}}, 1}));
    const ReducedInstance r = biclique_reduction({2, 3, {{0, 0}}, 2});
    CHECK(r.game.n() == 4);
    CHECK(r.game.weights()[3] == 2 * (8 - 4 + 1));
    CHECK(r.outcome.structure.coalitions.size() == 2);
    CHECK_THROWS(biclique_reduction({2, 2, {{2, 0}}, 1}));
  }

  TEST_CASE("biclique sides are swapped when the left is larger") {
    const BicliqueInstance wide{3, 1, {{0, 0}, {1, 0}, {2, 0}}, 3};
    CHECK(biclique_reduction(wide).game.n() == 4);
    CHECK(biclique_member(wide) == !oracle::biclique_yes(wide));
  }
}
