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

/// Convexity for threshold task games: a falsifier for the convexity
/// condition and the round-by-round construction of a c-core element.
///
/// In a threshold task game a group can pool its weight into proportional
/// copies of its best task multiset, so the payoff vectors reachable on a
/// set A are exactly those with q_j >= v*({j}) and sum q <= U[w(A)]. Both
/// procedures work on that description and are exact over continuous
/// contributions.

#ifndef OCF_CONVEXITY_HPP
#define OCF_CONVEXITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ocf/model.hpp"

namespace ocf {

struct RoundState {
  int agent = 0;         // agent added in this round
  AgentSet members;      // agents ordered up to and including `agent`
  PayoffVector floor;    // payoffs locked in by the previous round
  Outcome outcome;       // this round's agreement on `members`
};

struct ConstructedCore {
  Outcome outcome;
  std::vector<RoundState> rounds;
};

// `ordering` is a permutation of 0..n-1. Each round maximizes the new
// agent's payoff subject to everyone added earlier keeping at least their
// previous payoff. Throws std::invalid_argument for rule-based games.
ConstructedCore construct_core_element(const Game& game, const std::vector<int>& ordering);

// Three premise agreements (on S, on T and on S u R, the last one weakly
// preferred by S) for which no agreement on T u R satisfies both T and R.
struct ConvexityViolation {
  AgentSet r, s, t;
  Outcome on_s, on_t, on_s_and_r;
  Rational required;   // least total T u R must hand out
  Rational available;  // v*(T u R)
};

struct ConvexityReport {
  std::optional<ConvexityViolation> violation;
  long examined = 0;  // (R, S, T) triples checked
  bool exhaustive = false;
  Resolution resolution;
  long budget = 0;

  std::string summary() const;
};

// Walks the triples R nonempty, S strictly inside T, T disjoint from R in
// lexicographic order of (R, T, S) and stops at the first violation or
// after `budget` triples (0 means no limit). The resolution is only
// recorded; the check itself is exact.
ConvexityReport falsify_convexity(const Game& game, Resolution resolution = {}, long budget = 0);

}  // namespace ocf

#endif  // OCF_CONVEXITY_HPP
