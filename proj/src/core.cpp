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

#include "ocf/core.hpp"

#include <stdexcept>

#include "ocf/lp.hpp"
#include "ocf/welfare.hpp"

namespace ocf {
namespace {

Rational payoff_of(const PayoffVector& p, AgentSet s) {
  Rational total = 0;
  for (int j : s.members()) total += p.at(j);
  return total;
}

void check_width(int n, const PayoffVector& p) {
  if (static_cast<int>(p.size()) != n) {
    throw std::invalid_argument("payoff vector has " + std::to_string(p.size()) +
                                " entries, game has " + std::to_string(n) + " agents");
  }
}

std::vector<long> integral_weights(const TTG& scaled_game) {
  std::vector<long> out;
  for (const Rational& w : scaled_game.weights()) out.push_back(to_long(w));
  return out;
}

// Constraint sum_{j in S} p_j >= rhs over n payoff variables.
lp::Constraint cover_cut(int n, AgentSet s, const Rational& rhs) {
  lp::Constraint c{std::vector<Rational>(n), lp::Relation::kGreaterEqual, rhs};
  for (int j : s.members()) c.coefficients[j] = 1;
  return c;
}

CoreVerdict blocked(AgentSet s, Rational achievable, Rational payoff) {
  CoreVerdict v;
  v.stable = false;
  v.witness = BlockingWitness{s, std::move(achievable), std::move(payoff)};
  v.detail = "coalition " + s.to_string() + " can secure " + to_string(v.witness->achievable) +
             " but receives " + to_string(v.witness->payoff);
  return v;
}

}  // namespace

MinPayoffTable::MinPayoffTable(std::vector<long> weights, PayoffVector payoffs)
    : weights_(std::move(weights)) {
  if (weights_.size() != payoffs.size()) throw std::invalid_argument("weights/payoffs mismatch");
  capacity_ = 0;
  for (long w : weights_) {
    if (w <= 0) throw std::invalid_argument("weights must be positive integers");
    capacity_ += w;
  }
  const int n = agents();
  table_.assign(n + 1, std::vector<std::optional<Rational>>(capacity_ + 1));
  table_[0][0] = Rational(0);
  for (int i = 0; i < n; ++i) {
    for (long w = 0; w <= capacity_; ++w) {
      std::optional<Rational> best = table_[i][w];
      if (w >= weights_[i] && table_[i][w - weights_[i]]) {
        Rational with = *table_[i][w - weights_[i]] + payoffs[i];
        if (!best || with < *best) best = std::move(with);
      }
      table_[i + 1][w] = std::move(best);
    }
  }
}

const std::optional<Rational>& MinPayoffTable::at(int i, long w) const {
  return table_.at(i).at(static_cast<std::size_t>(w));
}

AgentSet MinPayoffTable::recover(int i, long w) const {
  if (!at(i, w)) throw std::logic_error("no subset of that weight");
  AgentSet s;
  for (int k = i; k > 0; --k) {
    if (table_[k - 1][w] && *table_[k - 1][w] == *table_[k][w]) continue;
    s = s.with(k - 1);
    w -= weights_[k - 1];
  }
  return s;
}

CoreVerdict check_cover_condition(const Game& game, const PayoffVector& p, Resolution resolution,
                                  int guard) {
  const int n = game.n();
  check_width(n, p);
  if (n > guard) throw std::length_error("too many agents for subset enumeration");
  CoverOracle cover(game, resolution);
  for (AgentSet s : nonempty_subsets(AgentSet::all(n))) {
    const Rational need = cover(s);
    const Rational have = payoff_of(p, s);
    if (have < need) return blocked(s, need, have);
  }
  return CoreVerdict{true, std::nullopt, std::nullopt, std::nullopt, "no blocking coalition"};
}

CoreVerdict check_cover_condition(const Game& game, const Outcome& outcome, Resolution resolution,
                                  int guard) {
  return check_cover_condition(game, payoff_vector(outcome, game.n()), resolution, guard);
}

CoreVerdict ttg_membership(const TTG& ttg, const PayoffVector& p) {
  check_width(ttg.n(), p);
  const ScaledProfile sp = scaled_profile(ttg);
  const MinPayoffTable table(integral_weights(sp.game), p);
  const int n = ttg.n();
  for (long w = 1; w <= table.capacity(); ++w) {
    const auto& least = table.at(n, w);
    if (least && *least < sp.profile.at(w)) {
      return blocked(table.recover(n, w), sp.profile.at(w), *least);
    }
  }
  return CoreVerdict{true, std::nullopt, std::nullopt, std::nullopt, "no blocking coalition"};
}

CoreVerdict ttg_membership(const TTG& ttg, const Outcome& outcome) {
  return ttg_membership(ttg, payoff_vector(outcome, ttg.n()));
}

CoreVerdict stabilize(const TTG& ttg) {
  const int n = ttg.n();
  const OverlappingOptimum opt = max_welfare_overlapping(ttg);
  if (opt.value == 0) {
    Outcome empty{CoalitionStructure{}, PayoffMatrix{}};
    return CoreVerdict{true, std::nullopt, std::move(empty), std::nullopt,
                       "no task can be completed; the empty outcome is stable"};
  }
  lp::Constraint efficiency = cover_cut(n, AgentSet::all(n), opt.value);
  efficiency.relation = lp::Relation::kEqual;
  lp::LinearProgram base;
  for (int j = 0; j < n; ++j) base.add_variable("p" + std::to_string(j + 1));
  base.add_constraint(std::move(efficiency));

  const lp::Result result = lp::solve_with_separation(
      std::move(base), [&](const std::vector<Rational>& p) -> std::optional<lp::Constraint> {
        const CoreVerdict v = ttg_membership(ttg, p);
        if (v.stable) return std::nullopt;
        return cover_cut(n, v.witness->set, v.witness->achievable);
      });
  if (!result.feasible()) {
    return CoreVerdict{false, std::nullopt, std::nullopt, std::nullopt,
                       "c-core is empty: no payoff vector on an optimal structure covers v*"};
  }
  Outcome outcome{opt.structure, {}};
  for (const PartialCoalition& c : opt.structure.coalitions) {
    const Rational share = value(ttg, c) / opt.value;
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = result.assignment[j] * share;
    outcome.payoffs.push_back(std::move(row));
  }
  return CoreVerdict{true, std::nullopt, std::move(outcome), std::nullopt,
                     "stabilizing outcome on the canonical optimal structure"};
}

namespace {

struct StructureLp {
  lp::LinearProgram program;
  std::vector<std::vector<int>> var;  // var[i][j], -1 when j does not support coalition i
  std::vector<int> coalition_row;     // -1 for empty coalitions
  std::vector<AgentSet> subset_row_set;
  int first_subset_row = 0;
};

StructureLp build_structure_lp(const Game& game, const CoalitionStructure& cs,
                               CoverOracle& cover, bool free_payoffs) {
  const int n = game.n();
  StructureLp s;
  const auto& coalitions = cs.coalitions;
  s.var.assign(coalitions.size(), std::vector<int>(n, -1));
  for (std::size_t i = 0; i < coalitions.size(); ++i) {
    for (int j : support(coalitions[i]).members()) {
      s.var[i][j] = s.program.add_variable(
          "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1), free_payoffs);
    }
  }
  int row = 0;
  s.coalition_row.assign(coalitions.size(), -1);
  for (std::size_t i = 0; i < coalitions.size(); ++i) {
    std::vector<std::pair<int, Rational>> terms;
    for (int j = 0; j < n; ++j) {
      if (s.var[i][j] >= 0) terms.emplace_back(s.var[i][j], 1);
    }
    if (terms.empty()) continue;
    s.program.add_constraint(terms, lp::Relation::kEqual, value(game, coalitions[i]));
    s.coalition_row[i] = row++;
  }
  s.first_subset_row = row;
  for (AgentSet set : nonempty_subsets(AgentSet::all(n))) {
    std::vector<std::pair<int, Rational>> terms;
    for (std::size_t i = 0; i < coalitions.size(); ++i) {
      for (int j : set.members()) {
        if (s.var[i][j] >= 0) terms.emplace_back(s.var[i][j], 1);
      }
    }
    s.program.add_constraint(terms, lp::Relation::kGreaterEqual, cover(set));
    s.subset_row_set.push_back(set);
  }
  return s;
}

Outcome read_outcome(const StructureLp& s, const CoalitionStructure& cs,
                     const std::vector<Rational>& point, int n) {
  Outcome out{cs, {}};
  for (std::size_t i = 0; i < cs.coalitions.size(); ++i) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) {
      if (s.var[i][j] >= 0) row[j] = point[s.var[i][j]];
    }
    out.payoffs.push_back(std::move(row));
  }
  return out;
}

}  // namespace

CoreVerdict stabilize_structure(const Game& game, const CoalitionStructure& cs,
                                Resolution resolution, int guard) {
  const int n = game.n();
  if (n > guard) throw std::length_error("too many agents for subset enumeration");
  const ValidationReport report = validate_structure(game, cs);
  if (!report.ok()) throw std::invalid_argument("invalid structure: " + report.violations.front());
  CoverOracle cover(game, resolution);

  // Prefer nonnegative payoffs; fall back to side payments only if needed.
  StructureLp nonneg = build_structure_lp(game, cs, cover, false);
  const lp::Result first = lp::solve(nonneg.program);
  if (first.feasible()) {
    return CoreVerdict{true, std::nullopt, read_outcome(nonneg, cs, first.assignment, n),
                       std::nullopt, "stabilizing imputation found"};
  }
  StructureLp free = build_structure_lp(game, cs, cover, true);
  const lp::Result second = lp::solve(free.program);
  if (second.feasible()) {
    return CoreVerdict{true, std::nullopt, read_outcome(free, cs, second.assignment, n),
                       std::nullopt,
                       "stabilizing imputation found; it needs negative per-coalition payoffs"};
  }
  BalancedCollection bc;
  bc.mu.assign(cs.coalitions.size(), Rational(0));
  for (std::size_t i = 0; i < cs.coalitions.size(); ++i) {
    if (free.coalition_row[i] >= 0) bc.mu[i] = second.farkas[free.coalition_row[i]];
  }
  const AgentSet everyone = AgentSet::all(n);
  for (std::size_t k = 0; k < free.subset_row_set.size(); ++k) {
    Rational lambda = second.farkas[free.first_subset_row + k];
    if (free.subset_row_set[k] == everyone) lambda += 1;
    if (lambda != 0) bc.lambda.emplace_back(free.subset_row_set[k], std::move(lambda));
  }
  return CoreVerdict{false, std::nullopt, std::nullopt, std::move(bc),
                     "no imputation of this structure is stable; balancedness fails"};
}

bool is_violating_certificate(const Game& game, const CoalitionStructure& cs,
                              const BalancedCollection& certificate, Resolution resolution) {
  const int n = game.n();
  if (certificate.mu.size() != cs.coalitions.size()) return false;
  for (const auto& [set, lambda] : certificate.lambda) {
    if (lambda < 0 || set.empty() || !set.subset_of(AgentSet::all(n))) return false;
  }
  for (std::size_t i = 0; i < cs.coalitions.size(); ++i) {
    for (int j : support(cs.coalitions[i]).members()) {
      Rational total = certificate.mu[i];
      for (const auto& [set, lambda] : certificate.lambda) {
        if (set.contains(j)) total += lambda;
      }
      if (total != 1) return false;
    }
  }
  CoverOracle cover(game, resolution);
  Rational lhs = 0;
  for (const auto& [set, lambda] : certificate.lambda) lhs += lambda * cover(set);
  for (std::size_t i = 0; i < cs.coalitions.size(); ++i) {
    lhs += certificate.mu[i] * value(game, cs.coalitions[i]);
  }
  return lhs > cover(AgentSet::all(n));
}

namespace {

void check_partition(int n, const std::vector<AgentSet>& partition) {
  AgentSet seen;
  for (AgentSet block : partition) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    if (block.intersects(seen)) throw std::invalid_argument("partition blocks overlap");
    seen = seen | block;
  }
  if (seen != AgentSet::all(n)) throw std::invalid_argument("partition does not cover all agents");
}

}  // namespace

CoreVerdict nonoverlapping_core_check(const TTG& ttg, const std::vector<AgentSet>& partition,
                                      const PayoffVector& p) {
  const int n = ttg.n();
  check_width(n, p);
  check_partition(n, partition);
  for (AgentSet block : partition) {
    const Rational v = ttg.value_of_weight(ttg.weight_of(block));
    if (payoff_of(p, block) != v) {
      throw std::invalid_argument("payoff is not efficient on block " + block.to_string() +
                                  ": " + to_string(payoff_of(p, block)) + " vs " + to_string(v));
    }
  }
  const TTG game = scaled(ttg, integral_scale(ttg));
  const MinPayoffTable table(integral_weights(game), p);
  for (long w = 1; w <= table.capacity(); ++w) {
    const auto& least = table.at(n, w);
    const Rational best = game.value_of_weight(w);
    if (least && *least < best) return blocked(table.recover(n, w), best, *least);
  }
  return CoreVerdict{true, std::nullopt, std::nullopt, std::nullopt, "no blocking coalition"};
}

CoreVerdict stabilize_partition(const TTG& ttg, const std::vector<AgentSet>& partition) {
  const int n = ttg.n();
  check_partition(n, partition);
  lp::LinearProgram base;
  for (int j = 0; j < n; ++j) base.add_variable("p" + std::to_string(j + 1));
  for (AgentSet block : partition) {
    lp::Constraint c = cover_cut(n, block, ttg.value_of_weight(ttg.weight_of(block)));
    c.relation = lp::Relation::kEqual;
    base.add_constraint(std::move(c));
  }
  const lp::Result result = lp::solve_with_separation(
      std::move(base), [&](const std::vector<Rational>& p) -> std::optional<lp::Constraint> {
        const CoreVerdict v = nonoverlapping_core_check(ttg, partition, p);
        if (v.stable) return std::nullopt;
        return cover_cut(n, v.witness->set, v.witness->achievable);
      });
  if (!result.feasible()) {
    return CoreVerdict{false, std::nullopt, std::nullopt, std::nullopt,
                       "no payoff vector on this partition is in the core"};
  }
  CoreVerdict v{true, std::nullopt, std::nullopt, std::nullopt, "stable payoff vector found"};
  Outcome out;
  for (AgentSet block : partition) {
    out.structure.coalitions.push_back(crisp(ttg.weights(), block));
    std::vector<Rational> row(n);
    for (int j : block.members()) row[j] = result.assignment[j];
    out.payoffs.push_back(std::move(row));
  }
  v.outcome = std::move(out);
  return v;
}

}  // namespace ocf
