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

/// Social welfare: knapsack profiles, optimal overlapping and
/// non-overlapping structures, and the superadditive cover v*.

#ifndef OCF_WELFARE_HPP
#define OCF_WELFARE_HPP

#include <map>
#include <vector>

#include "ocf/model.hpp"

namespace ocf {

// Smallest positive factor that makes all weights and thresholds integral.
Integer integral_scale(const TTG& ttg);
// Same game with weights and thresholds multiplied by `factor`.
TTG scaled(const TTG& ttg, const Integer& factor);

// Task multiplicities, indexed like TTG::tasks().
struct TaskMultiset {
  std::vector<long> counts;

  friend bool operator==(const TaskMultiset&, const TaskMultiset&) = default;
};

// U[w] = best total utility of task copies whose thresholds sum to at most w.
class KnapsackProfile {
 public:
  KnapsackProfile(std::vector<long> thresholds, std::vector<Rational> utilities, long capacity);

  long capacity() const { return static_cast<long>(best_.size()) - 1; }
  const Rational& at(long w) const { return best_.at(static_cast<std::size_t>(w)); }
  const std::vector<Rational>& values() const { return best_; }
  // Greedy backtrack taking the lowest usable task index first, which yields
  // the lexicographically smallest sorted index sequence among optima.
  TaskMultiset recover(long w) const;

 private:
  std::vector<long> thresholds_;
  std::vector<Rational> utilities_;
  std::vector<Rational> best_;
};

// Thresholds must already be integral (see scaled()).
KnapsackProfile knapsack_profile(const TTG& ttg, long capacity);

// Profile of the game after integral scaling, covering its total weight.
struct ScaledProfile {
  Integer factor;
  TTG game;
  KnapsackProfile profile;

  long scaled_weight(AgentSet s) const;
  // U at an arbitrary (unscaled) pooled weight.
  Rational value_at(const Rational& pooled_weight) const;
};
ScaledProfile scaled_profile(const TTG& ttg);

struct OverlappingOptimum {
  Rational value;
  TaskMultiset tasks;
  // One coalition per task copy (plus zero-utility filler copies of a
  // unit-threshold task), every agent spread evenly.
  CoalitionStructure structure;
};
OverlappingOptimum max_welfare_overlapping(const TTG& ttg);

struct PartitionOptimum {
  Rational value;
  std::vector<AgentSet> partition;
};
PartitionOptimum max_welfare_nonoverlapping(const TTG& ttg, int guard = 16);

// v*(S). Exact for threshold task games. For rule games: the best value of
// at most resolution.cap rule completions that members can fund together.
Rational vstar(const Game& game, AgentSet s, Resolution resolution = {});

// Memoizing wrapper over vstar for repeated queries on one game.
class CoverOracle {
 public:
  CoverOracle(const Game& game, Resolution resolution);
  Rational operator()(AgentSet s);
  const Game& game() const { return game_; }

 private:
  Game game_;
  Resolution resolution_;
  std::optional<ScaledProfile> profile_;
  std::map<std::uint32_t, Rational> cache_;
};

// Rule-based cover with an explicit capacity per agent (used for residual
// capacities during deviation search). Contributions are continuous.
Rational rule_cover(const RuleGame& game, const std::vector<Rational>& capacity, int cap);

}  // namespace ocf

#endif  // OCF_WELFARE_HPP
