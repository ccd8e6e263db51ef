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

/// Profitable deviations of a group J from an outcome.
///
/// Conservative (c): J leaves every coalition it shares with outsiders and
/// works alone. Refined (r): J may keep some shared coalitions untouched and
/// collect its old payoff there; any coalition it touches pays it nothing.
/// Optimistic (o): J may also reshape shared coalitions and claim whatever
/// value is left once the outsiders are paid their old shares.
///
/// Coalitions are matched by position, so the matching is the identity on
/// coalitions that involve outsiders. Searches use exact LPs; a deviator
/// can collect from a coalition only in proportion to its contribution up
/// to 1/D weight units, where D is the resolution's grid.

#ifndef OCF_DEVIATIONS_HPP
#define OCF_DEVIATIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocf/core.hpp"
#include "ocf/model.hpp"

namespace ocf {

enum class DeviationKind { kConservative, kRefined, kOptimistic };

std::string to_string(DeviationKind kind);
// "c", "r" or "o".
DeviationKind parse_deviation_kind(std::string_view text);

enum class CoalitionFate {
  kUntouched,  // no deviator involved
  kKept,       // deviators' contributions unchanged
  kAbandoned,  // deviators withdrew everything
  kModified,   // deviators changed their contributions
  kReleased,   // only deviators involved; folded into their new structure
};

std::string to_string(CoalitionFate fate);

struct DeviationPlan {
  AgentSet deviators;
  std::vector<CoalitionFate> fates;  // one per original coalition
  std::vector<int> matching;         // index of the image in `structure`, -1 if released
  CoalitionStructure structure;      // the post-deviation structure
  std::size_t first_new = 0;         // coalitions from here on are J's own
};

struct DeviationResult {
  bool found = false;
  DeviationKind kind = DeviationKind::kConservative;
  Resolution resolution;
  DeviationPlan plan;
  // Rows follow plan.structure. Outsider entries are their old payoffs on
  // untouched and kept coalitions and 0 elsewhere (not modeled).
  PayoffMatrix payoffs;
  PayoffVector before;  // p_j for j in J, 0 elsewhere
  PayoffVector after;   // post-deviation payoff for j in J, 0 elsewhere

  std::string narrate() const;
};

DeviationResult find_deviation(const Game& game, const Outcome& outcome, AgentSet deviators,
                               DeviationKind kind, Resolution resolution = {});

inline DeviationResult find_c_deviation(const Game& game, const Outcome& outcome,
                                        AgentSet deviators, Resolution resolution = {}) {
  return find_deviation(game, outcome, deviators, DeviationKind::kConservative, resolution);
}
inline DeviationResult find_r_deviation(const Game& game, const Outcome& outcome,
                                        AgentSet deviators, Resolution resolution = {}) {
  return find_deviation(game, outcome, deviators, DeviationKind::kRefined, resolution);
}
inline DeviationResult find_o_deviation(const Game& game, const Outcome& outcome,
                                        AgentSet deviators, Resolution resolution = {}) {
  return find_deviation(game, outcome, deviators, DeviationKind::kOptimistic, resolution);
}

// Re-checks a found deviation against the outcome it deviates from:
// outsider contributions agree under the matching, deviator capacities
// hold, payoffs follow the rules of the deviation kind, every deviator
// strictly gains.
ValidationReport validate_deviation(const Game& game, const Outcome& outcome,
                                    const DeviationResult& result);

struct DeviationVerdict {
  bool stable = true;
  Resolution resolution;
  std::optional<DeviationResult> deviation;  // first J in lexicographic order
};

DeviationVerdict core_membership(const Game& game, const Outcome& outcome, DeviationKind kind,
                                 Resolution resolution = {}, int guard = kDefaultSubsetGuard);

}  // namespace ocf

#endif  // OCF_DEVIATIONS_HPP
