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

#include "ocf/corpus.hpp"

namespace ocf::corpus {
namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

Outcome make_outcome(std::vector<std::vector<Rational>> units, PayoffMatrix payoffs) {
  return Outcome{CoalitionStructure{std::move(units), std::nullopt}, std::move(payoffs)};
}

TTG pairs_of_three() { return TTG({2, 2, 2}, {{3, 1}}); }

Outcome pairs_of_three_outcome() {
  return make_outcome({{2, 1, 0}, {0, 1, 2}},
                      {{q(2, 3), q(1, 3), 0}, {0, q(1, 3), q(2, 3)}});
}

TTG two_task_pair() { return TTG({4, 6}, {{5, 15}, {4, 10}}); }

CoalitionStructure two_task_pair_split() { return {{{1, 4}, {3, 2}}, std::nullopt}; }

Outcome two_task_pair_x() { return {two_task_pair_split(), {{7, 8}, {9, 6}}}; }
Outcome two_task_pair_y() { return {two_task_pair_split(), {{7, 8}, {8, 7}}}; }

CoalitionStructure two_task_pair_even() { return {{{2, 3}, {2, 3}}, std::nullopt}; }

Outcome two_task_pair_even_x() { return {two_task_pair_even(), {{3, 12}, {12, 3}}}; }
Outcome two_task_pair_even_y() { return {two_task_pair_even(), {{7, 8}, {8, 7}}}; }

Outcome two_task_pair_lopsided() { return make_outcome({{4, 3}, {0, 3}}, {{3, 12}, {0, 0}}); }

RuleGame seven_agent_rules() {
  std::vector<Rule> rules;
  const int pairs[][2] = {{0, 4}, {1, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}};
  for (const auto& [light, heavy] : pairs) {
    rules.push_back(Rule{{{AgentSet::of({light}), 1}, {AgentSet::of({heavy}), 2}}, 100});
  }
  rules.push_back(Rule{{{AgentSet::of({4, 5, 6}), 2}}, 2});
  return RuleGame({1, 1, 1, 1, 3, 3, 3}, std::move(rules));
}

Outcome seven_agent_rules_outcome(const Rational& share5) {
  return make_outcome({{1, 0, 0, 0, 2, 0, 0},
                       {0, 1, 0, 0, 0, 2, 0},
                       {0, 0, 1, 0, 0, 0, 2},
                       {0, 0, 0, 0, 1, 1, 0}},
                      {{0, 0, 0, 0, 100, 0, 0},
                       {0, 0, 0, 0, 0, 100, 0},
                       {0, 0, 0, 0, 0, 0, 100},
                       {0, 0, 0, 0, share5, 2 - share5, 0}});
}

RuleGame three_heavy_rules() {
  std::vector<Rule> rules;
  rules.push_back(Rule{{{AgentSet::of({0}), 6}, {AgentSet::of({1}), 6}, {AgentSet::of({2}), 6}},
                       300});
  rules.push_back(Rule{{{AgentSet::of({0, 1, 2}), 4}}, 2});
  return RuleGame({8, 8, 8}, std::move(rules));
}

Outcome three_heavy_rules_outcome() {
  return make_outcome({{7, 7, 6}, {1, 1, 2}}, {{100, 100, 100}, {q(1, 2), q(1, 2), 1}});
}

Outcome three_heavy_rules_skewed() {
  return make_outcome({{7, 7, 6}, {1, 1, 2}}, {{100, 100, 100}, {1, q(1, 2), q(1, 2)}});
}

TTG heavy_and_two_light() { return TTG({9, 1, 1}, {{8, 100}, {2, 1}}); }

std::vector<AgentSet> heavy_and_two_light_partition() {
  return {AgentSet::of({0}), AgentSet::of({1, 2})};
}

PayoffVector heavy_and_two_light_payoffs() { return {100, q(1, 2), q(1, 2)}; }

Outcome heavy_and_two_light_outcome() {
  return make_outcome({{8, 0, 0}, {1, 1, 1}}, {{100, 0, 0}, {0, q(1, 2), q(1, 2)}});
}

TTG fuzzy_gap() { return TTG({10, 10}, {{20, 20}, {7, 9}}); }

Outcome fuzzy_gap_outcome() { return make_outcome({{10, 10}}, {{10, 10}}); }

}  // namespace ocf::corpus
