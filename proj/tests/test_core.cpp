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

#include "doctest.h"
#include "ocf/core.hpp"
#include "ocf/corpus.hpp"
#include "ocf/random.hpp"
#include "ocf/welfare.hpp"
#include "oracles.hpp"

using namespace ocf;

TEST_SUITE("core") {
  TEST_CASE("cover condition on the two-task pair") {
    const Game g(corpus::two_task_pair());
    const CoreVerdict x = check_cover_condition(g, corpus::two_task_pair_x());
    REQUIRE_FALSE(x.stable);
    CHECK(x.witness->set == AgentSet::of({1}));
    CHECK(x.witness->achievable == 15);
    CHECK(x.witness->payoff == 14);
    CHECK(check_cover_condition(g, corpus::two_task_pair_y()).stable);
    CHECK(check_cover_condition(Game(TTG({3}, {{1, 2}})), PayoffVector{6}).stable);
  }

  TEST_CASE("threshold-game membership") {
    const CoreVerdict x = ttg_membership(corpus::two_task_pair(), corpus::two_task_pair_x());
    REQUIRE_FALSE(x.stable);
    CHECK(x.witness->set == AgentSet::of({1}));
    CHECK(ttg_membership(corpus::two_task_pair(), corpus::two_task_pair_y()).stable);
    const CoreVerdict p4 = ttg_membership(corpus::heavy_and_two_light(), PayoffVector{100, Rational(1, 2), Rational(1, 2)});
    REQUIRE_FALSE(p4.stable);
    CHECK(p4.witness->shortfall() > 0);
  }

  TEST_CASE("membership agrees with subset enumeration") {
    Rng rng(31);
    for (int t = 0; t < 80; ++t) {
      RandomTtgOptions o;
      o.agents = static_cast<int>(uniform(rng, 1, 6));
      o.tasks = 2;
      const TTG g = random_ttg(rng, o);
      PayoffVector p(g.n());
      for (Rational& x : p) x = Rational(uniform(rng, 0, 20), 2);
      const CoreVerdict fast = ttg_membership(g, p);
      CHECK(fast.stable == oracle::covers_all(g, p));
      CHECK(fast.stable == check_cover_condition(g, p).stable);
      if (!fast.stable) CHECK(oracle::paid(p, fast.witness->set) < oracle::cover(g, fast.witness->set));
    }
  }

  TEST_CASE("stabilize") {
    const CoreVerdict one = stabilize(corpus::pairs_of_three());
    REQUIRE(one.stable);
    CHECK(ttg_membership(corpus::pairs_of_three(), *one.outcome).stable);
    CHECK(validate_outcome(corpus::pairs_of_three(), *one.outcome).ok());
    CHECK_FALSE(stabilize(corpus::heavy_and_two_light()).stable);
    const CoreVerdict single = stabilize(TTG({1}, {{1, 1}}));
    REQUIRE(single.stable);
    CHECK(payoff_vector(*single.outcome, 1) == PayoffVector{1});
  }

  TEST_CASE("stabilize a fixed structure") {
    const Game g(corpus::two_task_pair());
    CHECK(stabilize_structure(g, corpus::two_task_pair_split()).stable);
    const CoalitionStructure lopsided = corpus::two_task_pair_lopsided().structure;
    const CoreVerdict v = stabilize_structure(g, lopsided);
    REQUIRE_FALSE(v.stable);
    REQUIRE(v.certificate);
    CHECK(is_violating_certificate(g, lopsided, *v.certificate));
    const Game zero(TTG({1}, {{2, 5}}));
    CHECK(stabilize_structure(zero, CoalitionStructure{}).stable);
  }

  TEST_CASE("stabilized structures are accepted and certificates are sound") {
    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
      RandomTtgOptions o;
      o.agents = static_cast<int>(uniform(rng, 1, 4));
      o.max_total_weight = 8;
      o.tasks = 2;
      const TTG g = random_ttg(rng, o);
      const OverlappingOptimum opt = max_welfare_overlapping(g);
      const CoreVerdict v = stabilize_structure(g, opt.structure);
      CHECK(v.stable == stabilize(g).stable);
      if (v.stable) {
        CHECK(ttg_membership(g, *v.outcome).stable);
      } else {
        CHECK(is_violating_certificate(g, opt.structure, *v.certificate));
      }
    }
  }

  TEST_CASE("non-overlapping checks") {
    const TTG p4 = corpus::heavy_and_two_light();
    CHECK(nonoverlapping_core_check(p4, corpus::heavy_and_two_light_partition(),
                                    corpus::heavy_and_two_light_payoffs()).stable);
    CHECK(stabilize_partition(p4, corpus::heavy_and_two_light_partition()).stable);
    const TTG three = corpus::pairs_of_three();
    CHECK_FALSE(stabilize_partition(three, {AgentSet::of({0, 1}), AgentSet::of({2})}).stable);
    CHECK_FALSE(nonoverlapping_core_check(three, {AgentSet::of({0, 1}), AgentSet::of({2})}, {1, 0, 0}).stable);
    CHECK(nonoverlapping_core_check(TTG({1}, {{2, 1}}), {AgentSet::of({0})}, {0}).stable);
    CHECK_THROWS(nonoverlapping_core_check(three, {AgentSet::of({0, 1})}, {1, 0, 0}));
    CHECK_THROWS(nonoverlapping_core_check(three, {AgentSet::of({0, 1}), AgentSet::of({2})}, {0, 0, 0}));
  }

  TEST_CASE("min-payoff table") {
    const MinPayoffTable t({1, 2, 3}, {5, 1, 2});
    // Weight 3 is reached by {1,2} for 6 or by {3} for 2.
    CHECK(*t.at(3, 3) == 2);
    CHECK(t.recover(3, 3) == AgentSet::of({2}));
    CHECK(*t.at(3, 6) == 8);
    CHECK_FALSE(t.at(1, 2).has_value());
  }
}
