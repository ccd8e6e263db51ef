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

#include "ocf/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ocf {

KnapsackInstance normalize(const KnapsackInstance& instance) {
  if (instance.capacity <= 0) throw std::invalid_argument("knapsack capacity must be positive");
  if (instance.target <= 0) throw std::invalid_argument("knapsack target must be positive");
  KnapsackInstance out{{}, instance.capacity, instance.target};
  std::vector<KnapsackItem> usable;
  for (const KnapsackItem& item : instance.items) {
    if (item.size <= 0) throw std::invalid_argument("item sizes must be positive");
    if (item.value < 0) throw std::invalid_argument("item values must be nonnegative");
    if (item.size > instance.capacity || item.value == 0) continue;
    if (item.value >= instance.target) {
      throw std::invalid_argument("an item alone reaches the target; the instance is trivial");
    }
    // An item as large as the knapsack can only ever be used alone.
    if (item.size == instance.capacity) continue;
    usable.push_back(item);
  }
  std::stable_sort(usable.begin(), usable.end(), [](const KnapsackItem& a, const KnapsackItem& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.value > b.value;
  });
  for (const KnapsackItem& item : usable) {
    if (out.items.empty() || item.value > out.items.back().value) out.items.push_back(item);
  }
  return out;
}

ReducedInstance knapsack_reduction(const KnapsackInstance& instance) {
  const KnapsackInstance k = normalize(instance);
  std::vector<TaskType> tasks;
  for (const KnapsackItem& item : k.items) tasks.push_back({Rational(item.size), Rational(item.value)});
  tasks.push_back({Rational(k.capacity), Rational(k.target - 1)});
  TTG game({Rational(k.capacity)}, std::move(tasks));
  Outcome outcome;
  outcome.structure.coalitions.push_back({Rational(k.capacity)});
  outcome.payoffs.push_back({Rational(k.target - 1)});
  return {std::move(game), std::move(outcome)};
}

ReducedInstance biclique_reduction(const BicliqueInstance& instance) {
  if (instance.left < 1 || instance.right < 1) throw std::invalid_argument("both sides need a vertex");
  if (instance.target < 1) throw std::invalid_argument("biclique target must be positive");
  std::set<std::pair<int, int>> edges;
  for (auto [l, r] : instance.edges) {
    if (l < 0 || l >= instance.left || r < 0 || r >= instance.right) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    edges.emplace(l, r);
  }
  int left = instance.left;
  int right = instance.right;
  if (left > right) {
    std::set<std::pair<int, int>> flipped;
    for (auto [l, r] : edges) flipped.emplace(r, l);
    edges = std::move(flipped);
    std::swap(left, right);
  }
  const long n = right + 1;
  const long k = left;
  if (n > kMaxAgents) throw std::invalid_argument("graph too large");
  const Integer M = Integer(k * k) * n * n;
  const Integer V = Integer(k * k) * n * M;
  const int heavy = static_cast<int>(n - 1);

  std::vector<Rational> weights(n, Rational(k));
  weights[heavy] = Rational(k * (k * n - n + 1));
  std::vector<TaskType> tasks{{Rational(k * n), Rational(V)},
                              {Rational(instance.target), Rational((n - 1) * k + 1)}};
  TTG game(weights, std::move(tasks));

  Outcome outcome;
  for (long j = 0; j < k; ++j) {
    PartialCoalition c(n);
    std::vector<Rational> row(n);
    Rational light_total = 0;
    for (int i = 0; i < heavy; ++i) {
      c[i] = 1;
      row[i] = edges.count({static_cast<int>(j), i}) ? Rational(1) : Rational(M);
      light_total += row[i];
    }
    c[heavy] = Rational(k * n - n + 1);
    row[heavy] = Rational(V) - light_total;
    outcome.structure.coalitions.push_back(std::move(c));
    outcome.payoffs.push_back(std::move(row));
  }
  return {std::move(game), std::move(outcome)};
}

}  // namespace ocf
