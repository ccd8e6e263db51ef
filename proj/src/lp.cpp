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

#include "ocf/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocf::lp {

int LinearProgram::add_variable(std::string name, bool free) {
  variables_.push_back({std::move(name), free});
  for (Constraint& c : constraints_) c.coefficients.emplace_back(0);
  if (objective_) objective_->coefficients.emplace_back(0);
  return num_variables() - 1;
}

void LinearProgram::add_constraint(Constraint constraint) {
  if (static_cast<int>(constraint.coefficients.size()) != num_variables()) {
    throw std::invalid_argument("constraint width does not match variable count");
  }
  constraints_.push_back(std::move(constraint));
}

void LinearProgram::add_constraint(const std::vector<std::pair<int, Rational>>& terms,
                                   Relation relation, Rational rhs) {
  Constraint c{std::vector<Rational>(variables_.size()), relation, std::move(rhs)};
  for (const auto& [var, coef] : terms) c.coefficients.at(var) += coef;
  constraints_.push_back(std::move(c));
}

void LinearProgram::set_objective(Objective objective) {
  if (static_cast<int>(objective.coefficients.size()) != num_variables()) {
    throw std::invalid_argument("objective width does not match variable count");
  }
  objective_ = std::move(objective);
}

void LinearProgram::set_objective(const std::vector<std::pair<int, Rational>>& terms,
                                  Sense sense) {
  Objective o{std::vector<Rational>(variables_.size()), sense};
  for (const auto& [var, coef] : terms) o.coefficients.at(var) += coef;
  objective_ = std::move(o);
}

bool LinearProgram::contains(const Constraint& constraint) const {
  return std::find(constraints_.begin(), constraints_.end(), constraint) != constraints_.end();
}

namespace {

class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<int> basis;
  std::vector<Rational> reduced;  // reduced costs, one per column

  int num_columns() const { return static_cast<int>(reduced.size()); }

  void price(const std::vector<Rational>& cost) {
    reduced = cost;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j < num_columns(); ++j) {
        if (rows[i][j] != 0) reduced[j] -= cb * rows[i][j];
      }
    }
  }

  void pivot(int r, int col) {
    std::vector<Rational>& prow = rows[r];
    const Rational inv = 1 / prow[col];
    std::vector<int> nz;
    for (int j = 0; j < num_columns(); ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (int j : nz) rows[i][j] -= f * prow[j];
      rhs[i] -= f * rhs[r];
    }
    if (reduced[col] != 0) {
      const Rational f = reduced[col];
      for (int j : nz) reduced[j] -= f * prow[j];
    }
    basis[r] = col;
  }

  // Minimizes the priced cost with Bland's rule. Returns false on an
  // unbounded ray.
  bool optimize(int column_limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < column_limit; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

Rational evaluate(const std::vector<Rational>& coef, const std::vector<Rational>& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    if (coef[j] != 0 && x[j] != 0) total += coef[j] * x[j];
  }
  return total;
}

bool holds(Relation rel, const Rational& lhs, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

}  // namespace

bool satisfies(const LinearProgram& program, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != program.num_variables()) return false;
  for (int v = 0; v < program.num_variables(); ++v) {
    if (!program.variables()[v].free && point[v] < 0) return false;
  }
  for (const Constraint& c : program.constraints()) {
    if (!holds(c.relation, evaluate(c.coefficients, point), c.rhs)) return false;
  }
  return true;
}

bool is_farkas_certificate(const LinearProgram& program, const std::vector<Rational>& y) {
  const auto& cons = program.constraints();
  if (y.size() != cons.size()) return false;
  Rational rhs = 0;
  std::vector<Rational> combo(program.num_variables());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (cons[i].relation == Relation::kGreaterEqual && y[i] < 0) return false;
    if (cons[i].relation == Relation::kLessEqual && y[i] > 0) return false;
    if (y[i] == 0) continue;
    rhs += y[i] * cons[i].rhs;
    for (int v = 0; v < program.num_variables(); ++v) combo[v] += y[i] * cons[i].coefficients[v];
  }
  for (int v = 0; v < program.num_variables(); ++v) {
    if (program.variables()[v].free ? combo[v] != 0 : combo[v] > 0) return false;
  }
  return rhs > 0;
}

Result solve(const LinearProgram& program) {
  const auto& vars = program.variables();
  const auto& cons = program.constraints();
  const int nv = program.num_variables();
  const int m = static_cast<int>(cons.size());

  // Column layout: structural (free variables split in two), slacks,
  // artificials.
  std::vector<int> first_col(nv);
  int ncols = 0;
  for (int v = 0; v < nv; ++v) {
    first_col[v] = ncols;
    ncols += vars[v].free ? 2 : 1;
  }
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (cons[i].relation != Relation::kEqual) slack_col[i] = ncols++;
  }
  const int non_artificial = ncols;

  std::vector<int> sign(m, 1);
  std::vector<int> start_col(m, -1);
  std::vector<bool> needs_artificial(m, false);
  for (int i = 0; i < m; ++i) {
    if (cons[i].rhs < 0) sign[i] = -1;
    if (slack_col[i] >= 0) {
      const int slack_sign = cons[i].relation == Relation::kLessEqual ? 1 : -1;
      if (slack_sign * sign[i] == 1) {
        start_col[i] = slack_col[i];
        continue;
      }
    }
    needs_artificial[i] = true;
    start_col[i] = ncols++;
  }

  Tableau t;
  t.rows.assign(m, std::vector<Rational>(ncols));
  t.rhs.resize(m);
  t.basis = start_col;
  for (int i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    for (int v = 0; v < nv; ++v) {
      const Rational& a = cons[i].coefficients[v];
      if (a == 0) continue;
      row[first_col[v]] = sign[i] * a;
      if (vars[v].free) row[first_col[v] + 1] = -sign[i] * a;
    }
    if (slack_col[i] >= 0) {
      row[slack_col[i]] = (cons[i].relation == Relation::kLessEqual ? 1 : -1) * sign[i];
    }
    if (needs_artificial[i]) row[start_col[i]] = 1;
    t.rhs[i] = sign[i] * cons[i].rhs;
  }

  Result result;
  std::vector<Rational> phase1_cost(ncols);
  bool any_artificial = false;
  for (int i = 0; i < m; ++i) {
    if (needs_artificial[i]) {
      phase1_cost[start_col[i]] = 1;
      any_artificial = true;
    }
  }
  if (any_artificial) {
    t.price(phase1_cost);
    t.optimize(ncols);
    Rational infeasibility = 0;
    for (int i = 0; i < m; ++i) infeasibility += phase1_cost[t.basis[i]] * t.rhs[i];
    if (infeasibility > 0) {
      result.status = Status::kInfeasible;
      result.farkas.resize(m);
      for (int i = 0; i < m; ++i) {
        const int c = start_col[i];
        result.farkas[i] = sign[i] * (phase1_cost[c] - t.reduced[c]);
      }
      if (!is_farkas_certificate(program, result.farkas)) {
        throw std::logic_error("simplex produced an invalid infeasibility certificate");
      }
      return result;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    std::vector<bool> keep(m, true);
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < non_artificial) continue;
      int col = -1;
      for (int j = 0; j < non_artificial; ++j) {
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        t.pivot(i, col);
      } else {
        keep[i] = false;
      }
    }
    Tableau reduced_t;
    for (int i = 0; i < m; ++i) {
      if (!keep[i]) continue;
      reduced_t.rows.emplace_back(t.rows[i].begin(), t.rows[i].begin() + non_artificial);
      reduced_t.rhs.push_back(t.rhs[i]);
      reduced_t.basis.push_back(t.basis[i]);
    }
    t = std::move(reduced_t);
  } else {
    for (auto& row : t.rows) row.resize(non_artificial);
  }
  t.reduced.assign(non_artificial, Rational(0));

  std::vector<Rational> cost(non_artificial);
  if (program.objective()) {
    const auto& obj = *program.objective();
    const int dir = obj.sense == Sense::kMaximize ? -1 : 1;
    for (int v = 0; v < nv; ++v) {
      cost[first_col[v]] = dir * obj.coefficients[v];
      if (vars[v].free) cost[first_col[v] + 1] = -dir * obj.coefficients[v];
    }
    t.price(cost);
    if (!t.optimize(non_artificial)) {
      result.status = Status::kUnbounded;
      return result;
    }
  }

  std::vector<Rational> column_value(non_artificial);
  for (std::size_t i = 0; i < t.rows.size(); ++i) column_value[t.basis[i]] = t.rhs[i];
  result.status = Status::kFeasible;
  result.assignment.resize(nv);
  for (int v = 0; v < nv; ++v) {
    result.assignment[v] = column_value[first_col[v]];
    if (vars[v].free) result.assignment[v] -= column_value[first_col[v] + 1];
  }
  if (program.objective()) {
    result.objective_value = evaluate(program.objective()->coefficients, result.assignment);
  }
  if (!satisfies(program, result.assignment)) {
    throw std::logic_error("simplex produced a point violating the program");
  }
  return result;
}

Result solve_with_separation(LinearProgram base, const SeparationOracle& oracle) {
  for (;;) {
    Result r = solve(base);
    if (!r.feasible()) return r;
    std::optional<Constraint> cut = oracle(r.assignment);
    if (!cut) return r;
    if (base.contains(*cut)) {
      throw std::logic_error("separation oracle returned a constraint already in the program");
    }
    base.add_constraint(std::move(*cut));
  }
}

Result solve_integral(const LinearProgram& program, const std::vector<int>& integer_variables) {
  LinearProgram feasibility;
  for (const Variable& v : program.variables()) feasibility.add_variable(v.name, v.free);
  for (const Constraint& c : program.constraints()) feasibility.add_constraint(c);
  Result r = solve(feasibility);
  if (!r.feasible()) return r;
  for (int v : integer_variables) {
    if (is_integer(r.assignment[v])) continue;
    const Integer lo = floor_of(r.assignment[v]);
    for (int side = 0; side < 2; ++side) {
      LinearProgram branch = feasibility;
      Constraint bound{std::vector<Rational>(program.num_variables()),
                       side == 0 ? Relation::kLessEqual : Relation::kGreaterEqual,
                       Rational(side == 0 ? lo : lo + 1)};
      bound.coefficients[v] = 1;
      branch.add_constraint(std::move(bound));
      Result sub = solve_integral(branch, integer_variables);
      if (sub.feasible()) return sub;
    }
    Result none;
    none.status = Status::kInfeasible;
    return none;
  }
  return r;
}

}  // namespace ocf::lp
