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

/// Seeded random instances. Boost.Random's engine and distributions are
/// specified exactly, so a seed reproduces the same instance everywhere.

#ifndef OCF_RANDOM_HPP
#define OCF_RANDOM_HPP

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>

#include "ocf/model.hpp"

namespace ocf {

using Rng = boost::random::mt19937_64;

// Inclusive on both ends.
long uniform(Rng& rng, long lo, long hi);

struct RandomTtgOptions {
  int agents = 4;
  long max_weight = 4;        // per agent, integral weights from 1
  long max_total_weight = 0;  // 0: no bound on w(N)
  int tasks = 2;
  long max_utility = 10;
};

// Thresholds are drawn from 1..w(N). Throws on nonpositive bounds or an
// unsatisfiable total-weight bound.
TTG random_ttg(Rng& rng, const RandomTtgOptions& options);

struct RandomRuleOptions {
  int agents = 3;
  long max_weight = 4;
  int rules = 3;
  int max_requirements = 2;
  long max_value = 10;
};

RuleGame random_rule_game(Rng& rng, const RandomRuleOptions& options);

}  // namespace ocf

#endif  // OCF_RANDOM_HPP
