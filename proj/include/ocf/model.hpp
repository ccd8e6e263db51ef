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

/// Games, partial coalitions, coalition structures and outcomes.
///
/// Contributions are kept in absolute weight units: entry j of a partial
/// coalition is w_j * r_j. All arithmetic is exact.

#ifndef OCF_MODEL_HPP
#define OCF_MODEL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ocf/agent_set.hpp"
#include "ocf/rational.hpp"

namespace ocf {

struct TaskType {
  Rational threshold;
  Rational utility;

  friend bool operator==(const TaskType&, const TaskType&) = default;
};

// Sorts by threshold and drops every task that some cheaper (or equally
// cheap) task matches or beats in utility. Zero-utility tasks go too.
std::vector<TaskType> normalize_tasks(std::vector<TaskType> tasks);

class TTG {
 public:
  TTG(std::vector<Rational> weights, std::vector<TaskType> tasks);

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  // Monotone list: thresholds and utilities strictly increasing.
  const std::vector<TaskType>& tasks() const { return tasks_; }

  Rational weight_of(AgentSet s) const;
  Rational total_weight() const { return weight_of(AgentSet::all(n())); }
  // Best single-task utility reachable with `pooled` weight units.
  Rational value_of_weight(const Rational& pooled) const;

 private:
  std::vector<Rational> weights_;
  std::vector<TaskType> tasks_;
};

struct Requirement {
  AgentSet agents;
  Rational min;
};

// A rule pays `value` when every requirement's agents jointly contribute at
// least `min` units.
struct Rule {
  std::vector<Requirement> requirements;
  Rational value;
};

class RuleGame {
 public:
  RuleGame(std::vector<Rational> weights, std::vector<Rule> rules);

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Rational> weights_;
  std::vector<Rule> rules_;
};

// Each task becomes one rule with a single requirement over all agents.
RuleGame as_rule_game(const TTG& ttg);

using PartialCoalition = std::vector<Rational>;

AgentSet support(const PartialCoalition& coalition);
bool is_zero(const PartialCoalition& coalition);
// The crisp coalition e^S in weight units.
PartialCoalition crisp(const std::vector<Rational>& weights, AgentSet s);

class Game {
 public:
  Game(TTG ttg) : impl_(std::move(ttg)) {}
  Game(RuleGame game) : impl_(std::move(game)) {}

  bool is_ttg() const { return std::holds_alternative<TTG>(impl_); }
  const TTG& ttg() const { return std::get<TTG>(impl_); }
  const RuleGame& rule_game() const { return std::get<RuleGame>(impl_); }

  int n() const;
  const std::vector<Rational>& weights() const;

 private:
  std::variant<TTG, RuleGame> impl_;
};

struct CoalitionStructure {
  std::vector<PartialCoalition> coalitions;
  std::optional<int> cap;
};

using PayoffMatrix = std::vector<std::vector<Rational>>;
using PayoffVector = std::vector<Rational>;

struct Outcome {
  CoalitionStructure structure;
  PayoffMatrix payoffs;  // one row per coalition, one column per agent
};

// Bounds on the search space used wherever a supremum or a quantifier over
// structures has to be made finite: at most `cap` coalitions formed by a
// group of agents, contributions in multiples of 1/grid weight units.
struct Resolution {
  int cap = 3;
  int grid = 1;
};

enum class PayoffPolicy { kNonnegative, kAllowNegative };

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Rational value(const Game& game, const PartialCoalition& coalition);
Rational structure_value(const Game& game, const CoalitionStructure& cs);
PayoffVector payoff_vector(const Outcome& outcome, int n);

ValidationReport validate_structure(const Game& game, const CoalitionStructure& cs);
ValidationReport validate_outcome(const Game& game, const Outcome& outcome,
                                  Resolution resolution = {},
                                  PayoffPolicy policy = PayoffPolicy::kNonnegative);

// Value of the crisp coalition e^S; equals v-hat(S) on threshold task games.
Rational to_nonoverlapping(const Game& game, AgentSet s);

// Drops all-zero coalitions (and their payoff rows).
CoalitionStructure pruned(const CoalitionStructure& cs);
Outcome pruned(const Outcome& outcome);

}  // namespace ocf

#endif  // OCF_MODEL_HPP
