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

#include <stdexcept>

#include "doctest.h"
#include "ocf/agent_set.hpp"
#include "ocf/corpus.hpp"
#include "ocf/model.hpp"
#include "ocf/rational.hpp"

using namespace ocf;

TEST_SUITE("model") {
  TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational(" -3 ") == Rational(-3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK(floor_of(Rational(-7, 2)) == -4);
    CHECK(ceil_of(Rational(-7, 2)) == -3);
    CHECK(to_long(Rational(12)) == 12);
    CHECK_THROWS(to_long(Rational(1, 3)));
  }

  TEST_CASE("agent sets print 1-based and enumerate in lexicographic order") {
    CHECK(AgentSet::of({0, 2}).to_string() == "{1,3}");
    const std::vector<AgentSet> subsets = nonempty_subsets(AgentSet::all(3));
    REQUIRE(subsets.size() == 7);
    CHECK(subsets[0] == AgentSet::of({0}));
    CHECK(subsets[1] == AgentSet::of({0, 1}));
    CHECK(subsets[2] == AgentSet::of({0, 1, 2}));
    CHECK(subsets[3] == AgentSet::of({0, 2}));
    CHECK(subsets.back() == AgentSet::of({2}));
  }

  TEST_CASE("task lists are normalized to a monotone staircase") {
    const TTG g({4, 6}, {{5, 15}, {4, 10}, {6, 12}, {3, 0}});
    REQUIRE(g.tasks().size() == 2);
    CHECK(g.tasks()[0] == TaskType{4, 10});
    CHECK(g.tasks()[1] == TaskType{5, 15});
    CHECK_THROWS_AS(TTG({1}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(TTG({0}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(RuleGame({1}, {Rule{{{AgentSet::of({0}), 0}}, 5}}), std::invalid_argument);
  }

  TEST_CASE("coalition values") {
    const Game g(corpus::two_task_pair());
    CHECK(value(g, {1, 4}) == 15);
    CHECK(value(g, {0, 0}) == 0);
    CHECK(value(g, {0, 3}) == 0);
    CHECK(structure_value(Game(corpus::pairs_of_three()), corpus::pairs_of_three_outcome().structure) == 2);
    CHECK(structure_value(g, CoalitionStructure{}) == 0);
    CHECK(structure_value(g, corpus::two_task_pair_split()) == 30);
    CHECK(to_nonoverlapping(Game(corpus::pairs_of_three()), AgentSet::of({0, 1})) == 1);
    CHECK(to_nonoverlapping(Game(corpus::pairs_of_three()), AgentSet::of({0})) == 0);
  }

  TEST_CASE("payoff vectors are column sums") {
    CHECK(payoff_vector(corpus::two_task_pair_x(), 2) == PayoffVector{16, 14});
    CHECK(payoff_vector(corpus::two_task_pair_y(), 2) == PayoffVector{15, 15});
    CHECK(payoff_vector(Outcome{}, 2) == PayoffVector{0, 0});
  }

  TEST_CASE("structure and outcome validation") {
    const Game g(corpus::two_task_pair());
    CHECK(validate_structure(g, corpus::two_task_pair_split()).ok());
    const ValidationReport over = validate_structure(g, {{{3, 0}, {3, 0}}, std::nullopt});
    REQUIRE(over.violations.size() == 1);
    CHECK(over.violations[0] == "agent 1 over capacity by 2");
    CHECK_FALSE(validate_structure(g, {{{1, 0}, {1, 0}, {1, 0}}, 2}).ok());

    CHECK(validate_outcome(g, corpus::two_task_pair_y()).ok());
    Outcome paid_idle{{{{0, 5}}, std::nullopt}, {{1, 14}}};
    CHECK(validate_outcome(g, paid_idle).violations.at(0).starts_with("(b)"));
    Outcome short_row{{{{1, 4}}, std::nullopt}, {{8, 8}}};
    CHECK(validate_outcome(g, short_row).violations.at(0).starts_with("(a)"));
    Outcome negative{{{{1, 4}}, std::nullopt}, {{-1, 16}}};
    CHECK_FALSE(validate_outcome(g, negative).ok());
    CHECK(validate_outcome(g, corpus::two_task_pair_x()).violations.at(0).starts_with("(c)"));
  }
}
