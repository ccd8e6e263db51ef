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

#include "ocf/fuzzy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ocf/core.hpp"
#include "ocf/welfare.hpp"

namespace ocf {
namespace {

void require_efficient(const TTG& ttg, const ScaledProfile& sp, const PayoffVector& p) {
  if (static_cast<int>(p.size()) != ttg.n()) throw std::invalid_argument("payoff vector has the wrong size");
  const Rational grand = sp.profile.at(sp.profile.capacity());
  if (sum(p) != grand) {
    throw std::invalid_argument("payoffs sum to " + to_string(sum(p)) + ", v'(1,...,1) is " +
                                to_string(grand));
  }
}

}  // namespace

Rational fuzzy_value(const TTG& ttg, const FuzzyCoalition& r) {
  if (static_cast<int>(r.size()) != ttg.n()) throw std::invalid_argument("fuzzy coalition has the wrong size");
  Rational pooled = 0;
  for (int j = 0; j < ttg.n(); ++j) {
    if (r[j] < 0 || r[j] > 1) throw std::invalid_argument("participation levels must lie in [0, 1]");
    pooled += r[j] * ttg.weights()[j];
  }
  return scaled_profile(ttg).value_at(pooled);
}

FuzzyCheckReport aubin_core_check(const TTG& ttg, const PayoffVector& p) {
  const ScaledProfile sp = scaled_profile(ttg);
  require_efficient(ttg, sp, p);
  const int n = ttg.n();
  FuzzyCheckReport report;
  // A negative payoff is beaten by that agent alone at any level.
  for (int j = 0; j < n; ++j) {
    if (p[j] < 0) {
      FuzzyCoalition r(n);
      r[j] = 1;
      report = {false, r, fuzzy_value(ttg, r), p[j]};
      return report;
    }
  }
  // Price classes in increasing price per scaled weight unit.
  std::map<Rational, std::vector<int>> classes;
  for (int j = 0; j < n; ++j) classes[p[j] / sp.game.weights()[j]].push_back(j);

  Rational worst = 0;
  for (long w = 1; w <= sp.profile.capacity(); ++w) {
    const Rational& value = sp.profile.at(w);
    if (value == 0) continue;
    FuzzyCoalition r(n);
    Rational cost = 0;
    Rational left(w);
    for (const auto& [price, agents] : classes) {
      if (left == 0) break;
      Rational weight = 0;
      for (int j : agents) weight += sp.game.weights()[j];
      const Rational level = std::min<Rational>(Rational(1), left / weight);
      for (int j : agents) r[j] = level;
      cost += price * weight * level;
      left -= weight * level;
    }
    const Rational gap = value - cost;
    if (gap > worst) {
      worst = gap;
      report = {false, r, value, cost};
    }
  }
  return report;
}

FuzzyCheckReport f_core_check(const TTG& ttg, const PayoffVector& p) {
  const ScaledProfile sp = scaled_profile(ttg);
  require_efficient(ttg, sp, p);
  const CoreVerdict verdict = ttg_membership(ttg, p);
  FuzzyCheckReport report;
  if (verdict.stable) return report;
  FuzzyCoalition r(ttg.n());
  for (int j : verdict.witness->set.members()) r[j] = 1;
  return {false, r, verdict.witness->achievable, verdict.witness->payoff};
}

}  // namespace ocf
