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

/// Small hand-checked instances used by the regression runner, the tests
/// and the CLI `examples` command. Contributions are in weight units.

#ifndef OCF_CORPUS_HPP
#define OCF_CORPUS_HPP

#include <vector>

#include "ocf/model.hpp"

namespace ocf::corpus {

// Builds an outcome from rows of contributions and rows of payoffs.
Outcome make_outcome(std::vector<std::vector<Rational>> units, PayoffMatrix payoffs);

// Three agents of weight 2, one task (3, 1). Pairs of agents can complete
// it twice when overlapping, once otherwise.
TTG pairs_of_three();
// Contributions ((2,1,0),(0,1,2)) paid ((2/3,1/3,0),(0,1/3,2/3)).
Outcome pairs_of_three_outcome();

// Two agents of weight (4, 6), tasks (5, 15) and (4, 10).
TTG two_task_pair();
// Two coalitions of weight 5: units ((1,4),(3,2)).
CoalitionStructure two_task_pair_split();
Outcome two_task_pair_x();  // payoffs ((7,8),(9,6))
Outcome two_task_pair_y();  // payoffs ((7,8),(8,7))
// Both agents split evenly: units ((2,3),(2,3)).
CoalitionStructure two_task_pair_even();
Outcome two_task_pair_even_x();  // payoffs ((3,12),(12,3))
Outcome two_task_pair_even_y();  // payoffs ((7,8),(8,7))
// Agent 1 all in, agent 2 split 3/3: units ((4,3),(0,3)) paid ((3,12),(0,0)).
Outcome two_task_pair_lopsided();

// Seven agents, weights (1,1,1,1,3,3,3). A value-100 rule for each of the
// pairs (1,5),(2,6),(3,7),(4,5),(4,6),(4,7) needing 1 and 2 units, plus a
// value-2 rule needing 2 units pooled from agents 5, 6, 7.
RuleGame seven_agent_rules();
// Three value-100 coalitions and one value-2 coalition of agents 5, 6;
// `share5` is agent 5's cut of the value-2 coalition.
Outcome seven_agent_rules_outcome(const Rational& share5 = 1);

// Three agents of weight 8. Value 300 when each gives 6 units; value 2 for
// 4 units pooled by anyone.
RuleGame three_heavy_rules();
// Units ((7,7,6),(1,1,2)) paid ((100,100,100),(1/2,1/2,1)).
Outcome three_heavy_rules_outcome();
Outcome three_heavy_rules_skewed();  // small coalition pays (1, 1/2, 1/2)

// Weights (9, 1, 1), tasks (8, 100) and (2, 1).
TTG heavy_and_two_light();
// Partition {{1},{2,3}} paying (100, 1/2, 1/2).
std::vector<AgentSet> heavy_and_two_light_partition();
PayoffVector heavy_and_two_light_payoffs();
// Overlapping version: units ((8,0,0),(1,1,1)) paid ((100,0,0),(0,1/2,1/2)).
Outcome heavy_and_two_light_outcome();

// Two agents of weight 10, tasks (20, 20) and (7, 9).
TTG fuzzy_gap();
// Grand coalition paying (10, 10).
Outcome fuzzy_gap_outcome();

}  // namespace ocf::corpus

#endif  // OCF_CORPUS_HPP
