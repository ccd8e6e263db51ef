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

/// The fuzzy game induced by a threshold task game, the Aubin core, and the
/// support-based f-core.
///
/// Fuzzy coalitions here are participation levels in [0, 1] (fractions of
/// each agent's weight), unlike PartialCoalition which holds weight units.

#ifndef OCF_FUZZY_HPP
#define OCF_FUZZY_HPP

#include <optional>
#include <vector>

#include "ocf/model.hpp"

namespace ocf {

using FuzzyCoalition = std::vector<Rational>;

struct FuzzyCheckReport {
  bool holds = true;
  std::optional<FuzzyCoalition> witness;
  Rational value;    // v'(witness)
  Rational payment;  // sum p_i r_i (Aubin) or p(supp r) (f-core)
};

// Best total value of any structure built from the pooled weight
// sum r_i w_i. Throws if r has the wrong size or leaves [0, 1].
Rational fuzzy_value(const TTG& ttg, const FuzzyCoalition& r);

// Aubin core: sum p_i r_i >= v'(r) for every r. Decided per integral
// pooled weight W by filling W with the cheapest weight first (agents tied
// on price per unit take equal fractions); the witness is the most
// violated W, smallest on ties. Throws unless p is efficient.
FuzzyCheckReport aubin_core_check(const TTG& ttg, const PayoffVector& p);

// f-core: p(supp r) >= v'(r) for every r, i.e. p(S) >= U[w(S)] for every S.
// Throws unless p is efficient.
FuzzyCheckReport f_core_check(const TTG& ttg, const PayoffVector& p);

}  // namespace ocf

#endif  // OCF_FUZZY_HPP
