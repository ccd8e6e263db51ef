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

/// Instance generators that turn unbounded knapsack and maximum edge
/// biclique questions into core-membership questions on threshold task
/// games.

#ifndef OCF_REDUCTIONS_HPP
#define OCF_REDUCTIONS_HPP

#include <utility>
#include <vector>

#include "ocf/model.hpp"

namespace ocf {

struct KnapsackItem {
  Integer size;
  Integer value;
};

// Yes-instance iff some multiset of items has total size <= capacity and
// total value >= target.
struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  Integer capacity;
  Integer target;
};

// Drops items that cannot fit or are dominated by a smaller, at least as
// valuable item. Throws std::invalid_argument when a single item already
// reaches the target, or on nonpositive sizes, capacity or target.
KnapsackInstance normalize(const KnapsackInstance& instance);

struct ReducedInstance {
  TTG game;
  Outcome outcome;
};

// One agent of weight B, a task per item plus (B, Z - 1), and the outcome
// where the agent spends everything on one coalition paid Z - 1. The
// outcome is c-stable iff the knapsack instance is a no-instance.
ReducedInstance knapsack_reduction(const KnapsackInstance& instance);

// Bipartite graph with vertices 0..left-1 and 0..right-1.
struct BicliqueInstance {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;  // (left vertex, right vertex)
  long target = 1;                         // wanted |L'| * |R'|
};

// Right vertices become light agents, plus one heavy agent; every left
// vertex becomes a coalition to which each agent gives 1/k of its weight.
// Light agents are paid 1 in coalitions of adjacent left vertices and M
// elsewhere. The outcome is r-stable iff no biclique has target edges.
// Sides are swapped first when left > right.
ReducedInstance biclique_reduction(const BicliqueInstance& instance);

}  // namespace ocf

#endif  // OCF_REDUCTIONS_HPP
