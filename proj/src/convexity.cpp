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

#include "ocf/convexity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ocf/welfare.hpp"

namespace ocf {
namespace {

const TTG& require_ttg(const Game& game) {
  if (!game.is_ttg()) throw std::invalid_argument("convexity tools support threshold task games only");
  return game.ttg();
}

// Proportional copies of A's best task multiset, paying q in proportion to
// each copy's utility. q must sum to U[w(A)] over A.
Outcome proportional_agreement(const ScaledProfile& sp, AgentSet a, const PayoffVector& q) {
  const int n = sp.game.n();
  Outcome out;
  const long level = sp.scaled_weight(a);
  const Rational total = sp.profile.at(level);
  if (total == 0) return out;
  const TaskMultiset tasks = sp.profile.recover(level);
  const Rational pooled(level);
  for (std::size_t t = 0; t < tasks.counts.size(); ++t) {
    const TaskType& task = sp.game.tasks()[t];
    for (long copy = 0; copy < tasks.counts[t]; ++copy) {
      PartialCoalition c(n);
      std::vector<Rational> row(n);
      for (int j : a.members()) {
        // Scaled weights over scaled pooled weight: the factor cancels.
        c[j] = sp.game.weights()[j] * task.threshold / pooled / Rational(sp.factor);
        row[j] = q[j] * task.utility / total;
      }
      out.structure.coalitions.push_back(std::move(c));
      out.payoffs.push_back(std::move(row));
    }
  }
  return out;
}

void append(Outcome& into, const Outcome& more) {
  for (std::size_t i = 0; i < more.structure.coalitions.size(); ++i) {
    into.structure.coalitions.push_back(more.structure.coalitions[i]);
    into.payoffs.push_back(more.payoffs[i]);
  }
}

}  // namespace

ConstructedCore construct_core_element(const Game& game, const std::vector<int>& ordering) {
  const TTG& ttg = require_ttg(game);
  const int n = ttg.n();
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(sorted.size()) != n || sorted[i] != i) {
      throw std::invalid_argument("ordering must be a permutation of the agents");
    }
  }
  const ScaledProfile sp = scaled_profile(ttg);
  ConstructedCore out;
  PayoffVector p(n);
  AgentSet members;
  Rational locked = 0;
  for (int k : ordering) {
    RoundState round;
    round.agent = k;
    round.floor = p;
    members = members.with(k);
    round.members = members;
    // The best agreement on `members` is worth U[w(members)] and everyone
    // before k keeps exactly their floor. Superadditivity of U makes this
    // at least v*({k}) for k.
    const Rational best = sp.profile.at(sp.scaled_weight(members));
    p[k] = best - locked;
    locked = best;
    round.outcome = proportional_agreement(sp, members, p);
    out.rounds.push_back(std::move(round));
  }
  out.outcome = out.rounds.empty() ? Outcome{} : out.rounds.back().outcome;
  return out;
}

std::string ConvexityReport::summary() const {
  std::ostringstream os;
  if (violation) {
    const ConvexityViolation& v = *violation;
    os << "violation: R = " << v.r.to_string() << ", S = " << v.s.to_string()
       << ", T = " << v.t.to_string() << "; T u R must hand out " << to_string(v.required)
       << " but can earn at most " << to_string(v.available);
    return os.str();
  }
  os << "no violation found at resolution (" << resolution.cap << ", " << resolution.grid << ", "
     << budget << ")";
  if (exhaustive) os << "; all " << examined << " triples checked";
  return os.str();
}

ConvexityReport falsify_convexity(const Game& game, Resolution resolution, long budget) {
  const TTG& ttg = require_ttg(game);
  const int n = ttg.n();
  if (n >= 16) throw std::length_error("too many agents for triple enumeration");
  const ScaledProfile sp = scaled_profile(ttg);
  auto U = [&](AgentSet a) { return sp.profile.at(sp.scaled_weight(a)); };
  std::vector<Rational> alone(n);
  for (int j = 0; j < n; ++j) alone[j] = U(AgentSet::of({j}));

  ConvexityReport report;
  report.resolution = resolution;
  report.budget = budget;
  const AgentSet everyone = AgentSet::all(n);
  for (AgentSet r : nonempty_subsets(everyone)) {
    for (AgentSet t : nonempty_subsets(everyone - r)) {
      std::vector<AgentSet> inner{AgentSet()};
      for (AgentSet s : nonempty_subsets(t)) {
        if (!(s == t)) inner.push_back(s);
      }
      for (AgentSet s : inner) {
        if (budget > 0 && report.examined >= budget) return report;
        ++report.examined;
        // Premise agreements that are hardest to satisfy: S at its
        // stand-alone values, T and S u R efficient, with S u R's surplus
        // going to R.
        Rational s_alone = 0;
        for (int j : s.members()) s_alone += alone[j];
        const Rational required = U(t) + U(s | r) - s_alone;
        const Rational available = U(t | r);
        if (required <= available) continue;

        ConvexityViolation v{r, s, t, {}, {}, {}, required, available};
        for (int j : s.members()) {
          PayoffVector q(n);
          q[j] = alone[j];
          append(v.on_s, proportional_agreement(sp, AgentSet::of({j}), q));
        }
        auto efficient = [&](AgentSet a, AgentSet favoured) {
          PayoffVector q(n);
          Rational rest = U(a);
          for (int j : a.members()) {
            q[j] = alone[j];
            rest -= alone[j];
          }
          q[favoured.members().front()] += rest;
          return proportional_agreement(sp, a, q);
        };
        v.on_t = efficient(t, t);
        v.on_s_and_r = efficient(s | r, r);
        report.violation = std::move(v);
        return report;
      }
    }
  }
  report.exhaustive = true;
  return report;
}

}  // namespace ocf
