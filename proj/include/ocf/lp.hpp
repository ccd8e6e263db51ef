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

/// Exact rational linear programming.
///
/// Two-phase tableau simplex with Bland's rule. Infeasible programs come
/// back with a Farkas certificate; feasible ones are re-checked against
/// every constraint before they are returned.

#ifndef OCF_LP_HPP
#define OCF_LP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ocf/rational.hpp"

namespace ocf::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kGreaterEqual;
  Rational rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Objective {
  std::vector<Rational> coefficients;
  Sense sense = Sense::kMaximize;
};

struct Variable {
  std::string name;
  bool free = false;  // otherwise bounded below by zero
};

class LinearProgram {
 public:
  int add_variable(std::string name, bool free = false);
  void add_constraint(Constraint constraint);
  // Convenience form over sparse (variable, coefficient) terms.
  void add_constraint(const std::vector<std::pair<int, Rational>>& terms, Relation relation,
                      Rational rhs);
  void set_objective(Objective objective);
  void set_objective(const std::vector<std::pair<int, Rational>>& terms, Sense sense);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::optional<Objective>& objective() const { return objective_; }
  bool contains(const Constraint& constraint) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::optional<Objective> objective_;
};

enum class Status { kFeasible, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  // Optimal (or, without an objective, some feasible) point.
  std::vector<Rational> assignment;
  Rational objective_value;
  // One multiplier per constraint: >= 0 on ">=" rows, <= 0 on "<=" rows,
  // free on "=" rows; combined rows have coefficient <= 0 on nonnegative
  // variables, 0 on free ones, and a strictly positive right-hand side.
  std::vector<Rational> farkas;

  bool feasible() const { return status == Status::kFeasible; }
};

Result solve(const LinearProgram& program);

bool satisfies(const LinearProgram& program, const std::vector<Rational>& point);
bool is_farkas_certificate(const LinearProgram& program, const std::vector<Rational>& y);

// Returns a violated constraint, or nothing when the point is acceptable.
using SeparationOracle = std::function<std::optional<Constraint>(const std::vector<Rational>&)>;

// Constraint generation: solve, ask the oracle, add the cut, repeat. Throws
// std::logic_error if the oracle hands back a constraint already present.
// The base program should be bounded under its objective: an unbounded
// relaxation is returned as is, before any cut is tried.
Result solve_with_separation(LinearProgram base, const SeparationOracle& oracle);

// Feasibility with integrality on the listed variables, by depth-first
// branching on fractional values. Objective, if any, is ignored.
Result solve_integral(const LinearProgram& program, const std::vector<int>& integer_variables);

}  // namespace ocf::lp

#endif  // OCF_LP_HPP
