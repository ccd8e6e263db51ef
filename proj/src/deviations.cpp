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

#include "ocf/deviations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ocf/lp.hpp"
#include "ocf/welfare.hpp"

namespace ocf {

std::string to_string(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::kConservative:
      return "c";
    case DeviationKind::kRefined:
      return "r";
    case DeviationKind::kOptimistic:
      return "o";
  }
  return "?";
}

DeviationKind parse_deviation_kind(std::string_view text) {
  if (text == "c") return DeviationKind::kConservative;
  if (text == "r") return DeviationKind::kRefined;
  if (text == "o") return DeviationKind::kOptimistic;
  throw std::invalid_argument("unknown deviation kind '" + std::string(text) + "'");
}

std::string to_string(CoalitionFate fate) {
  switch (fate) {
    case CoalitionFate::kUntouched:
      return "untouched";
    case CoalitionFate::kKept:
      return "kept";
    case CoalitionFate::kAbandoned:
      return "abandoned";
    case CoalitionFate::kModified:
      return "modified";
    case CoalitionFate::kReleased:
      return "released";
  }
  return "?";
}

namespace {

std::string join(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ",";
    out += to_string(values[j]);
  }
  return out + ")";
}

enum class Role { kEmpty, kInternal, kMixed, kOutside };

// What a reshaped coalition is steered towards.
struct Target {
  std::vector<Requirement> requirements;
  Rational value;
};

struct Choice {
  CoalitionFate fate = CoalitionFate::kUntouched;
  int target = -1;
};

// Everything needed to write a deviation out once a search leaf succeeds.
struct LeafWitness {
  std::vector<Choice> choices;
  std::vector<std::vector<Rational>> modified_units;  // per coalition, size n when modified
  std::vector<std::vector<Rational>> coalition_pay;   // per coalition, deviator payoffs
  long level = 0;                                     // threshold game pool, scaled units
  std::vector<Rational> pool_weight;                  // threshold game pool, per agent
  std::vector<Rational> pool_pay;
  std::vector<int> pool_rules;                        // rule game pool
  std::vector<std::vector<Rational>> pool_units;
  std::vector<std::vector<Rational>> pool_rule_pay;
};

class DeviationEngine {
 public:
  DeviationEngine(const Game& game, const Outcome& outcome, DeviationKind kind,
                  Resolution resolution);

  DeviationResult search(AgentSet deviators);

 private:
  struct Leaf {
    std::vector<Rational> capacity;  // free weight per deviator
    std::vector<Rational> fixed;     // refined kind: payoffs kept as they were
  };

  void prepare(AgentSet deviators);
  bool descend(std::size_t depth, std::vector<Choice>& choices, const Rational& collected);
  bool evaluate(const std::vector<Choice>& choices);
  Leaf leaf_of(const std::vector<Choice>& choices) const;
  bool evaluate_pooled(const std::vector<Choice>& choices, const Leaf& leaf);
  bool evaluate_rule_pool(const std::vector<Choice>& choices, const Leaf& leaf,
                          std::vector<int>& pool, std::size_t start, const Rational& sources,
                          const Rational& need, const std::vector<int>& candidates);
  // 1: found, 0: feasible but not profitable, -1: infeasible.
  int solve_leaf(const std::vector<Choice>& choices, const Leaf& leaf, long level,
                 const Rational& level_value, const std::vector<int>& rules);
  DeviationResult build(const LeafWitness& w) const;

  Rational source_bound(int i, const Choice& c) const;
  Rational need_of(const Leaf& leaf) const;

  Game game_;
  Outcome outcome_;
  DeviationKind kind_;
  Resolution resolution_;
  int n_;
  PayoffVector p_;
  std::vector<Target> targets_;
  std::optional<ScaledProfile> profile_;
  std::vector<long> breakpoints_;  // levels where the pooled profile steps up

  // Per deviator set.
  AgentSet J_;
  std::vector<Role> role_;
  std::vector<Rational> outsider_pay_;
  std::vector<Rational> insider_pay_;
  std::vector<std::vector<Choice>> options_;
  std::vector<int> modifiable_;
  std::vector<Rational> suffix_best_;
  Rational pool_upper_;
  Rational grid_step_;
  std::optional<LeafWitness> witness_;
};

DeviationEngine::DeviationEngine(const Game& game, const Outcome& outcome, DeviationKind kind,
                                 Resolution resolution)
    : game_(game), outcome_(outcome), kind_(kind), resolution_(resolution), n_(game.n()) {
  if (resolution_.cap < 1 || resolution_.grid < 1) {
    throw std::invalid_argument("cap and grid must be positive");
  }
  const ValidationReport report = validate_structure(game_, outcome_.structure);
  if (!report.ok()) throw std::invalid_argument("invalid structure: " + report.violations.front());
  if (outcome_.payoffs.size() != outcome_.structure.coalitions.size()) {
    throw std::invalid_argument("payoff matrix does not match the structure");
  }
  p_ = payoff_vector(outcome_, n_);
  grid_step_ = Rational(1, resolution_.grid);
  if (game_.is_ttg()) {
    profile_ = scaled_profile(game_.ttg());
    for (const TaskType& t : game_.ttg().tasks()) {
      targets_.push_back(Target{{Requirement{AgentSet::all(n_), t.threshold}}, t.utility});
    }
    breakpoints_.push_back(0);
    const auto& u = profile_->profile.values();
    for (std::size_t k = 1; k < u.size(); ++k) {
      if (u[k] > u[k - 1]) breakpoints_.push_back(static_cast<long>(k));
    }
  } else {
    for (const Rule& r : game_.rule_game().rules()) {
      if (r.value > 0) targets_.push_back(Target{r.requirements, r.value});
    }
  }
}

void DeviationEngine::prepare(AgentSet deviators) {
  J_ = deviators;
  const auto& cs = outcome_.structure.coalitions;
  const std::size_t m = cs.size();
  role_.assign(m, Role::kEmpty);
  outsider_pay_.assign(m, Rational(0));
  insider_pay_.assign(m, Rational(0));
  options_.assign(m, {});
  modifiable_.clear();
  for (std::size_t i = 0; i < m; ++i) {
    const AgentSet s = support(cs[i]);
    const bool inside = s.intersects(J_);
    const bool outside = !(s - J_).empty();
    role_[i] = s.empty()               ? Role::kEmpty
               : inside && outside     ? Role::kMixed
               : inside                ? Role::kInternal
                                       : Role::kOutside;
    for (int j = 0; j < n_; ++j) {
      (J_.contains(j) ? insider_pay_[i] : outsider_pay_[i]) += outcome_.payoffs[i][j];
    }
    std::vector<Choice>& opts = options_[i];
    if (role_[i] == Role::kMixed && kind_ != DeviationKind::kConservative) {
      opts.push_back({CoalitionFate::kAbandoned, -1});
      opts.push_back({CoalitionFate::kKept, -1});
    } else if (role_[i] == Role::kOutside && kind_ == DeviationKind::kOptimistic) {
      opts.push_back({CoalitionFate::kUntouched, -1});
    }
    if (kind_ == DeviationKind::kOptimistic &&
        (role_[i] == Role::kMixed || role_[i] == Role::kOutside)) {
      for (std::size_t t = 0; t < targets_.size(); ++t) {
        if (targets_[t].value > outsider_pay_[i]) {
          opts.push_back({CoalitionFate::kModified, static_cast<int>(t)});
        }
      }
    }
    if (opts.size() > 1) modifiable_.push_back(static_cast<int>(i));
  }
  suffix_best_.assign(modifiable_.size() + 1, Rational(0));
  for (std::size_t k = modifiable_.size(); k-- > 0;) {
    const int i = modifiable_[k];
    Rational best = 0;
    for (const Choice& c : options_[i]) best = std::max(best, source_bound(i, c));
    suffix_best_[k] = suffix_best_[k + 1] + best;
  }
  if (profile_) {
    pool_upper_ = profile_->value_at(game_.ttg().weight_of(J_));
  } else {
    std::vector<Rational> capacity(n_);
    for (int j : J_.members()) capacity[j] = game_.weights()[j];
    pool_upper_ = rule_cover(game_.rule_game(), capacity, resolution_.cap);
  }
}

// Most a coalition's choice can hand to the deviators as a shareable source.
Rational DeviationEngine::source_bound(int i, const Choice& c) const {
  if (c.fate == CoalitionFate::kModified) return targets_[c.target].value - outsider_pay_[i];
  if (c.fate == CoalitionFate::kKept && kind_ == DeviationKind::kOptimistic) {
    return std::max(insider_pay_[i], Rational(0));
  }
  return 0;
}

DeviationEngine::Leaf DeviationEngine::leaf_of(const std::vector<Choice>& choices) const {
  Leaf leaf{std::vector<Rational>(n_), std::vector<Rational>(n_)};
  const auto& cs = outcome_.structure.coalitions;
  for (int j : J_.members()) leaf.capacity[j] = game_.weights()[j];
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (choices[i].fate != CoalitionFate::kKept) continue;
    for (int j : J_.members()) {
      leaf.capacity[j] -= cs[i][j];
      if (kind_ == DeviationKind::kRefined) leaf.fixed[j] += outcome_.payoffs[i][j];
    }
  }
  return leaf;
}

Rational DeviationEngine::need_of(const Leaf& leaf) const {
  Rational need = 0;
  for (int j : J_.members()) {
    const Rational d = p_[j] - leaf.fixed[j];
    if (d >= 0) need += d;
  }
  return need;
}

DeviationResult DeviationEngine::search(AgentSet deviators) {
  if (deviators.empty()) throw std::invalid_argument("the deviating set must be nonempty");
  if (!deviators.subset_of(AgentSet::all(n_))) {
    throw std::invalid_argument("deviating set names an unknown agent");
  }
  prepare(deviators);
  witness_.reset();
  std::vector<Choice> choices(outcome_.structure.coalitions.size());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    switch (role_[i]) {
      case Role::kInternal:
        choices[i].fate = CoalitionFate::kReleased;
        break;
      case Role::kMixed:
        choices[i].fate = CoalitionFate::kAbandoned;
        break;
      default:
        choices[i].fate = CoalitionFate::kUntouched;
    }
    if (options_[i].size() == 1) choices[i] = options_[i].front();
  }
  if (descend(0, choices, Rational(0))) return build(*witness_);
  DeviationResult none;
  none.kind = kind_;
  none.resolution = resolution_;
  none.plan.deviators = deviators;
  return none;
}

bool DeviationEngine::descend(std::size_t depth, std::vector<Choice>& choices,
                              const Rational& collected) {
  if (kind_ == DeviationKind::kOptimistic) {
    Rational need = 0;
    for (int j : J_.members()) need += std::max(p_[j], Rational(0));
    if (collected + suffix_best_[depth] + pool_upper_ <= need) return false;
  }
  if (depth == modifiable_.size()) return evaluate(choices);
  const int i = modifiable_[depth];
  const Choice saved = choices[i];
  for (const Choice& c : options_[i]) {
    choices[i] = c;
    if (descend(depth + 1, choices, collected + source_bound(i, c))) return true;
  }
  choices[i] = saved;
  return false;
}

bool DeviationEngine::evaluate(const std::vector<Choice>& choices) {
  const Leaf leaf = leaf_of(choices);
  for (int j : J_.members()) {
    if (leaf.capacity[j] < 0) return false;
  }
  if (profile_ && kind_ != DeviationKind::kOptimistic) return evaluate_pooled(choices, leaf);

  Rational sources = 0;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    sources += source_bound(static_cast<int>(i), choices[i]);
  }
  const Rational need = need_of(leaf);

  if (profile_) {
    Rational committed = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      if (choices[i].fate != CoalitionFate::kModified) continue;
      const auto& cs = outcome_.structure.coalitions;
      Rational outsiders = 0;
      for (int k = 0; k < n_; ++k) {
        if (!J_.contains(k)) outsiders += cs[i][k];
      }
      committed += std::max<Rational>(targets_[choices[i].target].requirements[0].min - outsiders,
                            Rational(0));
    }
    Rational free_weight = -committed;
    for (int j : J_.members()) free_weight += leaf.capacity[j];
    if (free_weight < 0) return false;
    const Integer top = floor_of(free_weight * profile_->factor);
    for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) {
      if (Integer(*it) > top) continue;
      const Rational& value = profile_->profile.at(*it);
      if (sources + value <= need) break;
      const int status = solve_leaf(choices, leaf, *it, value, {});
      if (status == 1) return true;
    }
    return false;
  }

  std::vector<int> candidates;
  for (std::size_t r = 0; r < targets_.size(); ++r) {
    bool reachable = true;
    for (const Requirement& q : targets_[r].requirements) {
      Rational reach = 0;
      for (int j : (q.agents & J_).members()) reach += leaf.capacity[j];
      if (reach < q.min) reachable = false;
    }
    if (reachable) candidates.push_back(static_cast<int>(r));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return targets_[a].value > targets_[b].value; });
  std::vector<int> pool;
  return evaluate_rule_pool(choices, leaf, pool, 0, sources, need, candidates);
}

bool DeviationEngine::evaluate_rule_pool(const std::vector<Choice>& choices, const Leaf& leaf,
                                         std::vector<int>& pool, std::size_t start,
                                         const Rational& sources, const Rational& need,
                                         const std::vector<int>& candidates) {
  const int status = solve_leaf(choices, leaf, 0, 0, pool);
  if (status == 1) return true;
  if (status == -1) return false;
  if (static_cast<int>(pool.size()) >= resolution_.cap) return false;
  const int slots = resolution_.cap - static_cast<int>(pool.size());
  for (std::size_t k = start; k < candidates.size(); ++k) {
    const Rational& v = targets_[candidates[k]].value;
    if (sources + slots * v <= need) break;
    pool.push_back(candidates[k]);
    const bool hit =
        evaluate_rule_pool(choices, leaf, pool, k, sources + v, need, candidates);
    pool.pop_back();
    if (hit) return true;
  }
  return false;
}

// Threshold game with no reshaped coalitions: the deviators pool all free
// weight and can split the pooled value freely among those who put any in.
bool DeviationEngine::evaluate_pooled(const std::vector<Choice>& choices, const Leaf& leaf) {
  Rational free_weight = 0;
  for (int j : J_.members()) free_weight += leaf.capacity[j];
  const Integer scaled = floor_of(free_weight * profile_->factor);
  const long level = std::min<long>(scaled.convert_to<long>(), profile_->profile.capacity());
  const Rational value = profile_->profile.at(level);

  std::vector<int> needy;
  Rational need = 0;
  for (int j : J_.members()) {
    const Rational d = p_[j] - leaf.fixed[j];
    if (d < 0) continue;
    if (leaf.capacity[j] <= 0) return false;
    needy.push_back(j);
    need += d;
  }
  if (!needy.empty() && need >= value) return false;

  LeafWitness w;
  w.choices = choices;
  w.level = level;
  w.pool_weight = leaf.capacity;
  w.pool_pay.assign(n_, Rational(0));
  if (!needy.empty()) {
    const Rational bonus = (value - need) / static_cast<long>(needy.size());
    for (int j : needy) w.pool_pay[j] = p_[j] - leaf.fixed[j] + bonus;
  } else if (value > 0) {
    for (int j : J_.members()) {
      if (leaf.capacity[j] > 0) {
        w.pool_pay[j] = value;
        break;
      }
    }
  }
  witness_ = std::move(w);
  return true;
}

int DeviationEngine::solve_leaf(const std::vector<Choice>& choices, const Leaf& leaf, long level,
                                const Rational& level_value, const std::vector<int>& rules) {
  const auto& cs = outcome_.structure.coalitions;
  const std::size_t m = cs.size();
  const std::vector<int> members = J_.members();
  Rational delta = grid_step_;
  for (int j : members) {
    if (leaf.capacity[j] > 0 && leaf.capacity[j] < delta) delta = leaf.capacity[j];
  }

  lp::LinearProgram program;
  auto fresh = [&](const std::string& name, bool free = false) {
    return program.add_variable(name, free);
  };
  // Contribution variables.
  std::vector<std::vector<int>> mod_var(m, std::vector<int>(n_, -1));
  for (std::size_t i = 0; i < m; ++i) {
    if (choices[i].fate != CoalitionFate::kModified) continue;
    for (int j : members) {
      if (leaf.capacity[j] > 0) mod_var[i][j] = fresh("d");
    }
  }
  const bool ttg_pool = profile_.has_value();
  const std::size_t pools = ttg_pool ? (level > 0 ? 1 : 0) : rules.size();
  std::vector<std::vector<int>> pool_var(pools, std::vector<int>(n_, -1));
  for (std::size_t l = 0; l < pools; ++l) {
    for (int j : members) {
      if (leaf.capacity[j] > 0) pool_var[l][j] = fresh("c");
    }
  }
  // Payoff variables, one block per shareable source.
  struct Source {
    Rational value;
    std::vector<int> y;        // per agent
    std::vector<int> through;  // contribution variable gating y, -1 if none
  };
  std::vector<Source> sources;
  std::vector<int> source_of_coalition(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const bool kept = choices[i].fate == CoalitionFate::kKept && kind_ == DeviationKind::kOptimistic;
    const bool modified = choices[i].fate == CoalitionFate::kModified;
    if (!kept && !modified) continue;
    Source s{source_bound(static_cast<int>(i), choices[i]), std::vector<int>(n_, -1),
             std::vector<int>(n_, -1)};
    for (int j : members) {
      if (kept && cs[i][j] > 0) s.y[j] = fresh("y");
      if (modified && mod_var[i][j] >= 0) {
        s.y[j] = fresh("y");
        s.through[j] = mod_var[i][j];
      }
    }
    source_of_coalition[i] = static_cast<int>(sources.size());
    sources.push_back(std::move(s));
  }
  const std::size_t first_pool_source = sources.size();
  for (std::size_t l = 0; l < pools; ++l) {
    Source s{ttg_pool ? level_value : targets_[rules[l]].value, std::vector<int>(n_, -1),
             std::vector<int>(n_, -1)};
    for (int j : members) {
      if (pool_var[l][j] >= 0) {
        s.y[j] = fresh("y");
        s.through[j] = pool_var[l][j];
      }
    }
    sources.push_back(std::move(s));
  }
  const int eps = fresh("eps", true);

  // Capacity.
  for (int j : members) {
    std::vector<std::pair<int, Rational>> terms;
    for (std::size_t i = 0; i < m; ++i) {
      if (mod_var[i][j] >= 0) terms.emplace_back(mod_var[i][j], 1);
    }
    for (std::size_t l = 0; l < pools; ++l) {
      if (pool_var[l][j] >= 0) terms.emplace_back(pool_var[l][j], 1);
    }
    if (!terms.empty()) program.add_constraint(terms, lp::Relation::kLessEqual, leaf.capacity[j]);
  }
  // Reshaped coalitions must still meet their target.
  for (std::size_t i = 0; i < m; ++i) {
    if (choices[i].fate != CoalitionFate::kModified) continue;
    for (const Requirement& q : targets_[choices[i].target].requirements) {
      Rational rhs = q.min;
      std::vector<std::pair<int, Rational>> terms;
      for (int k : q.agents.members()) {
        if (J_.contains(k)) {
          if (mod_var[i][k] >= 0) terms.emplace_back(mod_var[i][k], 1);
        } else {
          rhs -= cs[i][k];
        }
      }
      if (rhs > 0) program.add_constraint(terms, lp::Relation::kGreaterEqual, rhs);
    }
  }
  // New coalitions.
  for (std::size_t l = 0; l < pools; ++l) {
    if (ttg_pool) {
      std::vector<std::pair<int, Rational>> terms;
      for (int j : members) {
        if (pool_var[l][j] >= 0) terms.emplace_back(pool_var[l][j], 1);
      }
      program.add_constraint(terms, lp::Relation::kGreaterEqual,
                             Rational(level) / Rational(profile_->factor));
      continue;
    }
    for (const Requirement& q : targets_[rules[l]].requirements) {
      if (q.min <= 0) continue;
      std::vector<std::pair<int, Rational>> terms;
      for (int k : (q.agents & J_).members()) {
        if (pool_var[l][k] >= 0) terms.emplace_back(pool_var[l][k], 1);
      }
      program.add_constraint(terms, lp::Relation::kGreaterEqual, q.min);
    }
  }
  // Each source is paid out in full, only to deviators who put weight in.
  for (const Source& s : sources) {
    std::vector<std::pair<int, Rational>> terms;
    for (int j : members) {
      if (s.y[j] >= 0) terms.emplace_back(s.y[j], 1);
    }
    program.add_constraint(terms, lp::Relation::kEqual, s.value);
    for (int j : members) {
      if (s.through[j] < 0) continue;
      program.add_constraint({{s.y[j], 1}, {s.through[j], -s.value / delta}},
                             lp::Relation::kLessEqual, 0);
    }
  }
  for (int j : members) {
    std::vector<std::pair<int, Rational>> terms{{eps, -1}};
    for (const Source& s : sources) {
      if (s.y[j] >= 0) terms.emplace_back(s.y[j], 1);
    }
    program.add_constraint(terms, lp::Relation::kGreaterEqual, p_[j] - leaf.fixed[j]);
  }
  program.add_constraint({{eps, 1}}, lp::Relation::kLessEqual, 1);
  program.set_objective({{eps, 1}}, lp::Sense::kMaximize);

  const lp::Result result = lp::solve(program);
  if (!result.feasible()) return -1;
  if (result.objective_value <= 0) return 0;

  const auto& a = result.assignment;
  LeafWitness w;
  w.choices = choices;
  w.modified_units.assign(m, {});
  w.coalition_pay.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    if (choices[i].fate == CoalitionFate::kModified) {
      w.modified_units[i].assign(n_, Rational(0));
      for (int j : members) {
        if (mod_var[i][j] >= 0) w.modified_units[i][j] = a[mod_var[i][j]];
      }
    }
    if (source_of_coalition[i] >= 0) {
      const Source& s = sources[source_of_coalition[i]];
      w.coalition_pay[i].assign(n_, Rational(0));
      for (int j : members) {
        if (s.y[j] >= 0) w.coalition_pay[i][j] = a[s.y[j]];
      }
    }
  }
  if (ttg_pool) {
    w.level = level;
    w.pool_weight.assign(n_, Rational(0));
    w.pool_pay.assign(n_, Rational(0));
    if (pools == 1) {
      for (int j : members) {
        if (pool_var[0][j] >= 0) w.pool_weight[j] = a[pool_var[0][j]];
        if (sources[first_pool_source].y[j] >= 0) {
          w.pool_pay[j] = a[sources[first_pool_source].y[j]];
        }
      }
    }
  } else {
    w.pool_rules = rules;
    for (std::size_t l = 0; l < pools; ++l) {
      std::vector<Rational> units(n_), pay(n_);
      for (int j : members) {
        if (pool_var[l][j] >= 0) units[j] = a[pool_var[l][j]];
        if (sources[first_pool_source + l].y[j] >= 0) {
          pay[j] = a[sources[first_pool_source + l].y[j]];
        }
      }
      w.pool_units.push_back(std::move(units));
      w.pool_rule_pay.push_back(std::move(pay));
    }
  }
  witness_ = std::move(w);
  return 1;
}

// Hands any value above the planned amount to the largest contributor.
void top_up(const Game& game, const PartialCoalition& c, AgentSet deviators, const Rational& planned,
            const Rational& actual, std::vector<Rational>& row) {
  if (actual <= planned) return;
  int best = -1;
  for (int j : deviators.members()) {
    if (c[j] > 0 && (best < 0 || c[j] > c[best])) best = j;
  }
  (void)game;
  if (best >= 0) row[best] += actual - planned;
}

DeviationResult DeviationEngine::build(const LeafWitness& w) const {
  DeviationResult out;
  out.found = true;
  out.kind = kind_;
  out.resolution = resolution_;
  DeviationPlan& plan = out.plan;
  plan.deviators = J_;
  const auto& cs = outcome_.structure.coalitions;
  const std::size_t m = cs.size();
  plan.fates.assign(m, CoalitionFate::kUntouched);
  plan.matching.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const CoalitionFate fate = w.choices[i].fate;
    plan.fates[i] = fate;
    if (fate == CoalitionFate::kReleased) continue;
    PartialCoalition image = cs[i];
    std::vector<Rational> row(n_);
    for (int k = 0; k < n_; ++k) {
      if (!J_.contains(k) && (fate == CoalitionFate::kUntouched || fate == CoalitionFate::kKept)) {
        row[k] = outcome_.payoffs[i][k];
      }
    }
    switch (fate) {
      case CoalitionFate::kKept:
        for (int j : J_.members()) {
          row[j] = kind_ == DeviationKind::kOptimistic ? w.coalition_pay[i][j]
                                                       : outcome_.payoffs[i][j];
        }
        break;
      case CoalitionFate::kAbandoned:
        for (int j : J_.members()) image[j] = 0;
        break;
      case CoalitionFate::kModified: {
        for (int j : J_.members()) {
          image[j] = w.modified_units[i][j];
          row[j] = w.coalition_pay[i][j];
        }
        const Rational planned = targets_[w.choices[i].target].value - outsider_pay_[i];
        const Rational actual = std::max<Rational>(value(game_, image) - outsider_pay_[i], Rational(0));
        top_up(game_, image, J_, planned, actual, row);
        break;
      }
      default:
        break;
    }
    plan.matching[i] = static_cast<int>(plan.structure.coalitions.size());
    plan.structure.coalitions.push_back(std::move(image));
    out.payoffs.push_back(std::move(row));
  }
  plan.first_new = plan.structure.coalitions.size();

  if (profile_) {
    Rational pooled = 0;
    for (int j : J_.members()) {
      if (!w.pool_weight.empty()) pooled += w.pool_weight[j];
    }
    const Rational total_value = profile_->profile.at(w.level);
    if (w.level > 0 && total_value > 0) {
      const TaskMultiset tasks = profile_->profile.recover(w.level);
      const auto& scaled_tasks = profile_->game.tasks();
      for (std::size_t t = 0; t < scaled_tasks.size(); ++t) {
        const Rational threshold = scaled_tasks[t].threshold / Rational(profile_->factor);
        const Rational utility = scaled_tasks[t].utility;
        for (long copy = 0; copy < tasks.counts[t]; ++copy) {
          PartialCoalition c(n_);
          std::vector<Rational> row(n_);
          for (int j : J_.members()) {
            c[j] = w.pool_weight[j] * threshold / pooled;
            row[j] = w.pool_pay[j] * utility / total_value;
          }
          plan.structure.coalitions.push_back(std::move(c));
          out.payoffs.push_back(std::move(row));
        }
      }
    }
  } else {
    for (std::size_t l = 0; l < w.pool_rules.size(); ++l) {
      PartialCoalition c = w.pool_units[l];
      std::vector<Rational> row = w.pool_rule_pay[l];
      top_up(game_, c, J_, targets_[w.pool_rules[l]].value, value(game_, c), row);
      plan.structure.coalitions.push_back(std::move(c));
      out.payoffs.push_back(std::move(row));
    }
  }

  out.before.assign(n_, Rational(0));
  out.after.assign(n_, Rational(0));
  for (int j : J_.members()) {
    out.before[j] = p_[j];
    for (const auto& row : out.payoffs) out.after[j] += row[j];
  }
  return out;
}

}  // namespace

std::string DeviationResult::narrate() const {
  std::ostringstream os;
  os << "deviators " << plan.deviators.to_string() << " (" << to_string(kind) << "-profitable, cap "
     << resolution.cap << ", grid 1/" << resolution.grid << ")\n";
  if (!found) {
    os << "no profitable deviation\n";
    return os.str();
  }
  for (std::size_t i = 0; i < plan.fates.size(); ++i) {
    os << "coalition " << i + 1 << ": " << to_string(plan.fates[i]);
    if (plan.fates[i] == CoalitionFate::kModified) {
      const int k = plan.matching[i];
      os << " to " << join(plan.structure.coalitions[k]) << ", pays " << join(payoffs[k]);
    }
    os << "\n";
  }
  for (std::size_t k = plan.first_new; k < plan.structure.coalitions.size(); ++k) {
    os << "new coalition " << join(plan.structure.coalitions[k]) << ", pays " << join(payoffs[k])
       << "\n";
  }
  for (int j : plan.deviators.members()) {
    os << "agent " << j + 1 << ": " << to_string(before[j]) << " -> " << to_string(after[j])
       << "\n";
  }
  return os.str();
}

DeviationResult find_deviation(const Game& game, const Outcome& outcome, AgentSet deviators,
                               DeviationKind kind, Resolution resolution) {
  DeviationEngine engine(game, outcome, kind, resolution);
  return engine.search(deviators);
}

ValidationReport validate_deviation(const Game& game, const Outcome& outcome,
                                    const DeviationResult& result) {
  ValidationReport report;
  auto fail = [&](std::string message) { report.violations.push_back(std::move(message)); };
  const int n = game.n();
  const AgentSet J = result.plan.deviators;
  const auto& cs = outcome.structure.coalitions;
  const DeviationPlan& plan = result.plan;
  if (!result.found) {
    fail("no deviation recorded");
    return report;
  }
  if (plan.fates.size() != cs.size() || plan.matching.size() != cs.size() ||
      result.payoffs.size() != plan.structure.coalitions.size()) {
    fail("plan dimensions do not match the outcome");
    return report;
  }
  const PayoffVector p = payoff_vector(outcome, n);
  std::vector<bool> matched(plan.structure.coalitions.size(), false);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const AgentSet s = support(cs[i]);
    const int k = plan.matching[i];
    if (k < 0) {
      if (!(s - J).empty()) fail("coalition " + std::to_string(i + 1) + " involves outsiders but has no image");
      continue;
    }
    if (k >= static_cast<int>(plan.first_new) || matched[k]) {
      fail("matching is not a bijection onto the matched coalitions");
      continue;
    }
    matched[k] = true;
    const PartialCoalition& image = plan.structure.coalitions[k];
    const auto& row = result.payoffs[k];
    for (int o = 0; o < n; ++o) {
      if (!J.contains(o) && image[o] != cs[i][o]) {
        fail("coalition " + std::to_string(i + 1) + ": outsider contributions differ");
      }
    }
    Rational outsider_pay = 0;
    for (int o = 0; o < n; ++o) {
      if (!J.contains(o)) outsider_pay += outcome.payoffs[i][o];
    }
    Rational deviator_sum = 0;
    for (int j : J.members()) deviator_sum += row[j];
    switch (plan.fates[i]) {
      case CoalitionFate::kUntouched:
        if (s.intersects(J) && result.kind != DeviationKind::kConservative) {
          fail("coalition " + std::to_string(i + 1) + " marked untouched but involves deviators");
        }
        break;
      case CoalitionFate::kKept:
        for (int j : J.members()) {
          if (image[j] != cs[i][j]) fail("kept coalition changed by deviators");
        }
        if (result.kind == DeviationKind::kRefined) {
          for (int j : J.members()) {
            if (row[j] != outcome.payoffs[i][j]) fail("kept coalition pays a deviator differently");
          }
        } else if (result.kind == DeviationKind::kOptimistic) {
          if (deviator_sum != std::max<Rational>(value(game, image) - outsider_pay, Rational(0))) {
            fail("kept coalition does not pay out its leftover");
          }
        } else {
          fail("conservative deviations keep nothing");
        }
        break;
      case CoalitionFate::kAbandoned:
        for (int j : J.members()) {
          if (image[j] != 0 || row[j] != 0) fail("abandoned coalition still involves deviators");
        }
        break;
      case CoalitionFate::kModified:
        if (result.kind != DeviationKind::kOptimistic) fail("only optimistic deviations reshape");
        if (deviator_sum != std::max<Rational>(value(game, image) - outsider_pay, Rational(0))) {
          fail("modified coalition does not pay out its leftover");
        }
        break;
      case CoalitionFate::kReleased:
        fail("released coalition has an image");
        break;
    }
  }
  for (std::size_t k = plan.first_new; k < plan.structure.coalitions.size(); ++k) {
    const PartialCoalition& c = plan.structure.coalitions[k];
    const AgentSet s = support(c);
    if (s.empty() || !s.subset_of(J)) fail("new coalition " + std::to_string(k + 1) + " is not over J");
    if (sum(result.payoffs[k]) != value(game, c)) {
      fail("new coalition " + std::to_string(k + 1) + " does not pay out its value");
    }
  }
  for (int j : J.members()) {
    Rational used = 0;
    Rational total = 0;
    for (std::size_t k = 0; k < plan.structure.coalitions.size(); ++k) {
      const Rational& units = plan.structure.coalitions[k][j];
      const Rational& pay = result.payoffs[k][j];
      if (units < 0) fail("negative contribution");
      if (pay < 0) fail("negative payoff to agent " + std::to_string(j + 1));
      if (pay != 0 && units == 0) fail("agent " + std::to_string(j + 1) + " paid without contributing");
      used += units;
      total += pay;
    }
    if (used > game.weights()[j]) fail("agent " + std::to_string(j + 1) + " over capacity");
    if (total != result.after[j]) fail("recorded payoff of agent " + std::to_string(j + 1) + " is off");
    if (!(total > p[j])) fail("agent " + std::to_string(j + 1) + " does not strictly gain");
  }
  return report;
}

DeviationVerdict core_membership(const Game& game, const Outcome& outcome, DeviationKind kind,
                                 Resolution resolution, int guard) {
  const int n = game.n();
  if (n > guard) throw std::length_error("too many agents for subset enumeration");
  DeviationEngine engine(game, outcome, kind, resolution);
  DeviationVerdict verdict{true, resolution, std::nullopt};
  for (AgentSet J : nonempty_subsets(AgentSet::all(n))) {
    DeviationResult r = engine.search(J);
    if (r.found) {
      verdict.stable = false;
      verdict.deviation = std::move(r);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace ocf
