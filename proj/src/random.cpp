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

#include "ocf/random.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/random/uniform_int_distribution.hpp>

namespace ocf {

long uniform(Rng& rng, long lo, long hi) {
  return boost::random::uniform_int_distribution<long>(lo, hi)(rng);
}

TTG random_ttg(Rng& rng, const RandomTtgOptions& options) {
  if (options.agents < 1 || options.agents > kMaxAgents) throw std::invalid_argument("agent count out of range");
  if (options.max_weight < 1 || options.tasks < 1 || options.max_utility < 1) {
    throw std::invalid_argument("bounds must be positive");
  }
  if (options.max_total_weight != 0 && options.max_total_weight < options.agents) {
    throw std::invalid_argument("total weight bound is below one unit per agent");
  }
  std::vector<Rational> weights;
  long total = 0;
  for (int j = 0; j < options.agents; ++j) {
    long hi = options.max_weight;
    if (options.max_total_weight != 0) {
      // Leave at least one unit for each agent still to come.
      hi = std::min(hi, options.max_total_weight - total - (options.agents - j - 1));
    }
    const long w = uniform(rng, 1, hi);
    total += w;
    weights.emplace_back(w);
  }
  std::vector<TaskType> tasks;
  for (int t = 0; t < options.tasks; ++t) {
    tasks.push_back({Rational(uniform(rng, 1, total)), Rational(uniform(rng, 1, options.max_utility))});
  }
  return TTG(std::move(weights), std::move(tasks));
}

RuleGame random_rule_game(Rng& rng, const RandomRuleOptions& options) {
  if (options.agents < 1 || options.agents > kMaxAgents) throw std::invalid_argument("agent count out of range");
  if (options.max_weight < 1 || options.rules < 1 || options.max_requirements < 1 ||
      options.max_value < 1) {
    throw std::invalid_argument("bounds must be positive");
  }
  std::vector<Rational> weights;
  for (int j = 0; j < options.agents; ++j) weights.emplace_back(uniform(rng, 1, options.max_weight));
  const long full = (1L << options.agents) - 1;
  std::vector<Rule> rules;
  for (int r = 0; r < options.rules; ++r) {
    Rule rule{{}, Rational(uniform(rng, 1, options.max_value))};
    const int count = static_cast<int>(uniform(rng, 1, options.max_requirements));
    for (int q = 0; q < count; ++q) {
      const AgentSet agents(static_cast<std::uint32_t>(uniform(rng, 1, full)));
      long reach = 0;
      for (int j : agents.members()) reach += to_long(weights[j]);
      rule.requirements.push_back({agents, Rational(uniform(rng, 1, reach))});
    }
    rules.push_back(std::move(rule));
  }
  return RuleGame(std::move(weights), std::move(rules));
}

}  // namespace ocf
