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

/// c-core and non-overlapping core: the cover condition p(S) >= v*(S),
/// the weight-indexed membership test for threshold task games, LP
/// stabilization and balancedness certificates.

#ifndef OCF_CORE_HPP
#define OCF_CORE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocf/model.hpp"

namespace ocf {

inline constexpr int kDefaultSubsetGuard = 16;

struct BlockingWitness {
  AgentSet set;
  Rational achievable;  // v*(S), or the best single task for crisp checks
  Rational payoff;      // p(S)

  Rational shortfall() const { return achievable - payoff; }
};

// Weights lambda_S and mu_i with sum_{S containing j} lambda_S + mu_i = 1 for
// every coalition i and every j in its support.
struct BalancedCollection {
  std::vector<std::pair<AgentSet, Rational>> lambda;  // positive entries only
  std::vector<Rational> mu;                           // one per coalition
};

struct CoreVerdict {
  bool stable = false;
  std::optional<BlockingWitness> witness;
  std::optional<Outcome> outcome;                  // stabilizing outcome
  std::optional<BalancedCollection> certificate;  // emptiness certificate
  std::string detail;
};

// P[i][w]: least total payoff of a subset of the first i agents whose
// integral weights sum to exactly w; absent when no such subset exists.
class MinPayoffTable {
 public:
  MinPayoffTable(std::vector<long> weights, PayoffVector payoffs);

  int agents() const { return static_cast<int>(weights_.size()); }
  long capacity() const { return capacity_; }
  const std::optional<Rational>& at(int i, long w) const;
  // A subset realizing P[i][w]; prefers leaving out the later agent on ties.
  AgentSet recover(int i, long w) const;

 private:
  std::vector<long> weights_;
  long capacity_;
  std::vector<std::vector<std::optional<Rational>>> table_;
};

// Stable iff p(S) >= v*(S) for every nonempty S; the witness is the first
// violating S in lexicographic order. Individual rationality is part of
// the condition (singletons), not a precondition.
CoreVerdict check_cover_condition(const Game& game, const PayoffVector& p,
                                  Resolution resolution = {},
                                  int guard = kDefaultSubsetGuard);
CoreVerdict check_cover_condition(const Game& game, const Outcome& outcome,
                                  Resolution resolution = {},
                                  int guard = kDefaultSubsetGuard);

// Same condition for threshold task games, decided per total weight with a
// MinPayoffTable against the knapsack profile. The witness is found at the
// smallest failing weight.
CoreVerdict ttg_membership(const TTG& ttg, const PayoffVector& p);
CoreVerdict ttg_membership(const TTG& ttg, const Outcome& outcome);

// Constraint generation over payoff vectors on the canonical optimal
// structure. Stable with an outcome, or unstable when the c-core is empty.
CoreVerdict stabilize(const TTG& ttg);

// Looks for an imputation of `cs` satisfying the cover condition. When none
// exists the LP's Farkas multipliers come back as a balanced collection
// with sum lambda_S v*(S) + sum mu_i v(r^i) > v*(N).
CoreVerdict stabilize_structure(const Game& game, const CoalitionStructure& cs,
                                Resolution resolution = {},
                                int guard = kDefaultSubsetGuard);

// Checks the balancing equalities exactly and that the collection breaks
// the balancedness inequality strictly.
bool is_violating_certificate(const Game& game, const CoalitionStructure& cs,
                              const BalancedCollection& certificate,
                              Resolution resolution = {});

// Non-overlapping core: p must be efficient on each block; stable iff no
// crisp coalition can complete a task worth more than its members' payoff.
CoreVerdict nonoverlapping_core_check(const TTG& ttg, const std::vector<AgentSet>& partition,
                                      const PayoffVector& p);

// LP over payoff vectors efficient on each block of `partition`.
CoreVerdict stabilize_partition(const TTG& ttg, const std::vector<AgentSet>& partition);

}  // namespace ocf

#endif  // OCF_CORE_HPP
