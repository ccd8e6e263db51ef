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
#include "ocf/corpus.hpp"
#include "ocf/random.hpp"
#include "ocf/welfare.hpp"
#include "oracles.hpp"

using namespace ocf;

TEST_SUITE("welfare") {
  TEST_CASE("knapsack profile") {
    const KnapsackProfile one = knapsack_profile(corpus::pairs_of_three(), 6);
    CHECK(one.at(6) == 2);
    CHECK(one.at(0) == 0);
    CHECK(knapsack_profile(corpus::two_task_pair(), 10).at(10) == 30);
  }

  TEST_CASE("knapsack profile matches multiset enumeration") {
    Rng rng(21);
    for (int t = 0; t < 60; ++t) {
      RandomTtgOptions o;
      o.agents = 3;
      o.max_weight = 5;
      o.tasks = 3;
      const TTG g = random_ttg(rng, o);
      const long cap = to_long(g.total_weight());
      const KnapsackProfile prof = knapsack_profile(g, cap);
      for (long w = 0; w <= cap; ++w) CHECK(prof.at(w) == oracle::best_multiset(g.tasks(), w));
    }
  }

  TEST_CASE("overlapping optimum") {
    CHECK(max_welfare_overlapping(corpus::pairs_of_three()).value == 2);
    CHECK(max_welfare_overlapping(TTG({5}, {{1, 1}})).value == 5);
    const OverlappingOptimum p4 = max_welfare_overlapping(corpus::heavy_and_two_light());
    CHECK(p4.value == 101);
    CHECK(validate_structure(corpus::heavy_and_two_light(), p4.structure).ok());
    CHECK(structure_value(corpus::heavy_and_two_light(), p4.structure) == 101);
  }

  TEST_CASE("canonical structures realize the optimum on random games") {
    Rng rng(22);
    for (int t = 0; t < 50; ++t) {
      RandomTtgOptions o;
      o.agents = static_cast<int>(uniform(rng, 1, 5));
      o.tasks = 3;
      const TTG g = random_ttg(rng, o);
      const OverlappingOptimum opt = max_welfare_overlapping(g);
      CHECK(opt.value == oracle::cover(g, AgentSet::all(g.n())));
      CHECK(validate_structure(g, opt.structure).ok());
      CHECK(structure_value(g, opt.structure) == opt.value);
    }
  }

  TEST_CASE("fractional weights are scaled") {
    const TTG g({Rational(1, 2), Rational(3, 4)}, {{Rational(1, 4), 1}});
    CHECK(max_welfare_overlapping(g).value == 5);
    CHECK(vstar(g, AgentSet::of({0})) == 2);
  }

  TEST_CASE("non-overlapping optimum") {
    CHECK(max_welfare_nonoverlapping(corpus::pairs_of_three()).value == 1);
    CHECK(max_welfare_nonoverlapping(TTG({5}, {{1, 1}})).value == 1);
    CHECK(max_welfare_nonoverlapping(corpus::heavy_and_two_light()).value == 101);
  }

  TEST_CASE("superadditive cover") {
    const Game g(corpus::two_task_pair());
    CHECK(vstar(g, AgentSet::of({1})) == 15);
    CHECK(vstar(g, AgentSet{}) == 0);
    CHECK(vstar(g, AgentSet::all(2)) == 30);
    const Game one(corpus::pairs_of_three());
    CHECK(vstar(one, AgentSet::of({0, 1})) == 1);
    CHECK(vstar(one, AgentSet::of({0})) == 0);
  }

  TEST_CASE("rule cover agrees with the task cover when the cap is loose") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
      RandomTtgOptions o;
      o.agents = static_cast<int>(uniform(rng, 1, 3));
      o.max_weight = 3;
      o.max_total_weight = 6;
      o.tasks = 2;
      const TTG g = random_ttg(rng, o);
      const Game rules(as_rule_game(g));
      const int cap = static_cast<int>(to_long(g.total_weight()));
      for (AgentSet s : nonempty_subsets(AgentSet::all(g.n()))) {
        CHECK(vstar(rules, s, {cap, 1}) == vstar(g, s));
      }
    }
  }
}
