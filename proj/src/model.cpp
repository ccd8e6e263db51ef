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

#include "ocf/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "ocf/welfare.hpp"

namespace ocf {
namespace {

void check_weights(const std::vector<Rational>& weights) {
  if (weights.empty()) throw std::invalid_argument("a game needs at least one agent");
  if (static_cast<int>(weights.size()) > kMaxAgents) throw std::invalid_argument("too many agents");
  for (const Rational& w : weights) {
    if (w <= 0) throw std::invalid_argument("agent weights must be positive");
  }
}

void check_dimension(const Game& game, const PartialCoalition& c) {
  if (static_cast<int>(c.size()) != game.n()) {
    throw std::invalid_argument("coalition has " + std::to_string(c.size()) +
                                " entries, game has " + std::to_string(game.n()) + " agents");
  }
}

std::string agent_label(int j) { return "agent " + std::to_string(j + 1); }
std::string coalition_label(std::size_t i) { return "coalition " + std::to_string(i + 1); }

}  // namespace

std::vector<TaskType> normalize_tasks(std::vector<TaskType> tasks) {
  std::stable_sort(tasks.begin(), tasks.end(), [](const TaskType& a, const TaskType& b) {
    if (a.threshold != b.threshold) return a.threshold < b.threshold;
    return a.utility > b.utility;
  });
  std::vector<TaskType> out;
  for (TaskType& t : tasks) {
    const Rational floor_utility = out.empty() ? Rational(0) : out.back().utility;
    if (t.utility > floor_utility) out.push_back(std::move(t));
  }
  return out;
}

TTG::TTG(std::vector<Rational> weights, std::vector<TaskType> tasks) : weights_(std::move(weights)) {
  check_weights(weights_);
  for (const TaskType& t : tasks) {
    if (t.threshold < 0 || t.utility < 0) {
      throw std::invalid_argument("task thresholds and utilities must be nonnegative");
    }
    if (t.threshold == 0 && t.utility > 0) {
      throw std::invalid_argument("a zero-threshold task with positive utility gives v(0) > 0");
    }
  }
  tasks_ = normalize_tasks(std::move(tasks));
}

Rational TTG::weight_of(AgentSet s) const {
  Rational total = 0;
  for (int j : s.members()) total += weights_.at(j);
  return total;
}

Rational TTG::value_of_weight(const Rational& pooled) const {
  Rational best = 0;
  for (const TaskType& t : tasks_) {
    if (t.threshold <= pooled) best = t.utility;  // monotone list
  }
  return best;
}

RuleGame::RuleGame(std::vector<Rational> weights, std::vector<Rule> rules)
    : weights_(std::move(weights)), rules_(std::move(rules)) {
  check_weights(weights_);
  const AgentSet everyone = AgentSet::all(n());
  for (const Rule& r : rules_) {
    if (r.value < 0) throw std::invalid_argument("rule values must be nonnegative");
    bool demanding = false;
    for (const Requirement& q : r.requirements) {
      if (q.agents.empty()) throw std::invalid_argument("requirement with an empty agent set");
      if (!q.agents.subset_of(everyone)) throw std::invalid_argument("requirement names an unknown agent");
      if (q.min < 0) throw std::invalid_argument("requirement minimums must be nonnegative");
      if (q.min > 0) demanding = true;
    }
    if (r.value > 0 && !demanding) {
      throw std::invalid_argument("a positive rule with no positive requirement gives v(0) > 0");
    }
  }
}

RuleGame as_rule_game(const TTG& ttg) {
  std::vector<Rule> rules;
  for (const TaskType& t : ttg.tasks()) {
    rules.push_back(Rule{{Requirement{AgentSet::all(ttg.n()), t.threshold}}, t.utility});
  }
  return RuleGame(ttg.weights(), std::move(rules));
}

AgentSet support(const PartialCoalition& coalition) {
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < coalition.size(); ++j) {
    if (coalition[j] != 0) mask |= 1U << j;
  }
  return AgentSet(mask);
}

bool is_zero(const PartialCoalition& coalition) { return support(coalition).empty(); }

PartialCoalition crisp(const std::vector<Rational>& weights, AgentSet s) {
  PartialCoalition c(weights.size());
  for (int j : s.members()) c.at(j) = weights[j];
  return c;
}

int Game::n() const {
  return std::visit([](const auto& g) { return g.n(); }, impl_);
}

const std::vector<Rational>& Game::weights() const {
  return std::visit([](const auto& g) -> const std::vector<Rational>& { return g.weights(); },
                    impl_);
}

Rational value(const Game& game, const PartialCoalition& coalition) {
  check_dimension(game, coalition);
  if (game.is_ttg()) return game.ttg().value_of_weight(sum(coalition));
  Rational best = 0;
  for (const Rule& rule : game.rule_game().rules()) {
    if (rule.value <= best) continue;
    bool met = true;
    for (const Requirement& q : rule.requirements) {
      Rational got = 0;
      for (int j : q.agents.members()) got += coalition[j];
      if (got < q.min) {
        met = false;
        break;
      }
    }
    if (met) best = rule.value;
  }
  return best;
}

Rational structure_value(const Game& game, const CoalitionStructure& cs) {
  const ValidationReport report = validate_structure(game, cs);
  if (!report.ok()) throw std::invalid_argument("invalid structure: " + report.violations.front());
  Rational total = 0;
  for (const PartialCoalition& c : cs.coalitions) total += value(game, c);
  return total;
}

PayoffVector payoff_vector(const Outcome& outcome, int n) {
  PayoffVector p(n);
  for (const auto& row : outcome.payoffs) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("payoff row width mismatch");
    for (int j = 0; j < n; ++j) p[j] += row[j];
  }
  return p;
}

ValidationReport validate_structure(const Game& game, const CoalitionStructure& cs) {
  ValidationReport report;
  const int n = game.n();
  std::vector<Rational> used(n);
  for (std::size_t i = 0; i < cs.coalitions.size(); ++i) {
    const PartialCoalition& c = cs.coalitions[i];
    if (static_cast<int>(c.size()) != n) {
      report.violations.push_back(coalition_label(i) + " has the wrong number of entries");
      continue;
    }
    for (int j = 0; j < n; ++j) {
      if (c[j] < 0) {
        report.violations.push_back(coalition_label(i) + ": negative contribution by " +
                                    agent_label(j));
      }
      used[j] += c[j];
    }
  }
  for (int j = 0; j < n; ++j) {
    if (used[j] > game.weights()[j]) {
      report.violations.push_back(agent_label(j) + " over capacity by " +
                                  to_string(used[j] - game.weights()[j]));
    }
  }
  if (cs.cap) {
    if (*cs.cap < 1) {
      report.violations.push_back("cap must be positive");
    } else if (static_cast<int>(cs.coalitions.size()) > *cs.cap) {
      report.violations.push_back("structure has " + std::to_string(cs.coalitions.size()) +
                                  " coalitions, cap is " + std::to_string(*cs.cap));
    }
  }
  return report;
}

ValidationReport validate_outcome(const Game& game, const Outcome& outcome, Resolution resolution,
                                  PayoffPolicy policy) {
  ValidationReport report = validate_structure(game, outcome.structure);
  if (!report.ok()) return report;
  const int n = game.n();
  const auto& coalitions = outcome.structure.coalitions;
  if (outcome.payoffs.size() != coalitions.size()) {
    report.violations.push_back("payoff matrix has " + std::to_string(outcome.payoffs.size()) +
                                " rows for " + std::to_string(coalitions.size()) + " coalitions");
    return report;
  }
  for (std::size_t i = 0; i < coalitions.size(); ++i) {
    const auto& row = outcome.payoffs[i];
    if (static_cast<int>(row.size()) != n) {
      report.violations.push_back(coalition_label(i) + ": payoff row has the wrong width");
      return report;
    }
    const Rational v = value(game, coalitions[i]);
    if (sum(row) != v) {
      report.violations.push_back("(a) " + coalition_label(i) + ": payoffs sum to " +
                                  to_string(sum(row)) + ", value is " + to_string(v));
    }
    for (int j = 0; j < n; ++j) {
      if (coalitions[i][j] == 0 && row[j] != 0) {
        report.violations.push_back("(b) " + coalition_label(i) + ": " + agent_label(j) +
                                    " is paid without contributing");
      }
      if (policy == PayoffPolicy::kNonnegative && row[j] < 0) {
        report.violations.push_back("(d) " + coalition_label(i) + ": negative payoff to " +
                                    agent_label(j));
      }
    }
  }
  CoverOracle cover(game, resolution);
  const PayoffVector p = payoff_vector(outcome, n);
  for (int j = 0; j < n; ++j) {
    const Rational alone = cover(AgentSet::of({j}));
    if (p[j] < alone) {
      report.violations.push_back("(c) " + agent_label(j) + " receives " + to_string(p[j]) +
                                  " but can secure " + to_string(alone) + " alone");
    }
  }
  return report;
}

Rational to_nonoverlapping(const Game& game, AgentSet s) {
  return value(game, crisp(game.weights(), s));
}

CoalitionStructure pruned(const CoalitionStructure& cs) {
  CoalitionStructure out{{}, cs.cap};
  for (const PartialCoalition& c : cs.coalitions) {
    if (!is_zero(c)) out.coalitions.push_back(c);
  }
  return out;
}

Outcome pruned(const Outcome& outcome) {
  Outcome out{{{}, outcome.structure.cap}, {}};
  for (std::size_t i = 0; i < outcome.structure.coalitions.size(); ++i) {
    if (is_zero(outcome.structure.coalitions[i])) continue;
    out.structure.coalitions.push_back(outcome.structure.coalitions[i]);
    if (i < outcome.payoffs.size()) out.payoffs.push_back(outcome.payoffs[i]);
  }
  return out;
}

}  // namespace ocf
