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

#include "ocf/welfare.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ocf/lp.hpp"

namespace ocf {
namespace {

constexpr long kMaxProfileCapacity = 50'000'000;

}  // namespace

Integer integral_scale(const TTG& ttg) {
  std::vector<Rational> all = ttg.weights();
  for (const TaskType& t : ttg.tasks()) all.push_back(t.threshold);
  return denominator_lcm(all);
}

TTG scaled(const TTG& ttg, const Integer& factor) {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rational> weights;
  for (const Rational& w : ttg.weights()) weights.push_back(w * factor);
  std::vector<TaskType> tasks;
  for (const TaskType& t : ttg.tasks()) tasks.push_back({t.threshold * factor, t.utility});
  return TTG(std::move(weights), std::move(tasks));
}

KnapsackProfile::KnapsackProfile(std::vector<long> thresholds, std::vector<Rational> utilities,
                                 long capacity)
    : thresholds_(std::move(thresholds)), utilities_(std::move(utilities)) {
  if (capacity < 0) throw std::invalid_argument("negative knapsack capacity");
  if (capacity > kMaxProfileCapacity) throw std::length_error("knapsack capacity too large");
  best_.assign(static_cast<std::size_t>(capacity) + 1, Rational(0));
  for (long w = 1; w <= capacity; ++w) {
    Rational b = best_[w - 1];
    for (std::size_t j = 0; j < thresholds_.size(); ++j) {
      if (thresholds_[j] <= w) {
        Rational cand = best_[w - thresholds_[j]] + utilities_[j];
        if (cand > b) b = std::move(cand);
      }
    }
    best_[w] = std::move(b);
  }
}

TaskMultiset KnapsackProfile::recover(long w) const {
  TaskMultiset out{std::vector<long>(thresholds_.size(), 0)};
  while (w > 0 && best_[w] > 0) {
    bool took = false;
    for (std::size_t j = 0; j < thresholds_.size(); ++j) {
      if (thresholds_[j] <= w && best_[w - thresholds_[j]] + utilities_[j] == best_[w]) {
        ++out.counts[j];
        w -= thresholds_[j];
        took = true;
        break;
      }
    }
    if (!took) --w;
  }
  return out;
}

KnapsackProfile knapsack_profile(const TTG& ttg, long capacity) {
  std::vector<long> thresholds;
  std::vector<Rational> utilities;
  for (const TaskType& t : ttg.tasks()) {
    if (!is_integer(t.threshold)) {
      throw std::invalid_argument("threshold " + t.threshold.str() +
                                  " is not integral; scale the game first");
    }
    thresholds.push_back(to_long(t.threshold));
    utilities.push_back(t.utility);
  }
  return KnapsackProfile(std::move(thresholds), std::move(utilities), capacity);
}

long ScaledProfile::scaled_weight(AgentSet s) const { return to_long(game.weight_of(s)); }

Rational ScaledProfile::value_at(const Rational& pooled_weight) const {
  const Integer w = floor_of(pooled_weight * factor);
  if (w <= 0) return 0;
  const long cap = profile.capacity();
  return profile.at(w > cap ? cap : w.convert_to<long>());
}

ScaledProfile scaled_profile(const TTG& ttg) {
  const Integer factor = integral_scale(ttg);
  TTG game = scaled(ttg, factor);
  const long total = to_long(game.total_weight());
  KnapsackProfile profile = knapsack_profile(game, total);
  return ScaledProfile{factor, std::move(game), std::move(profile)};
}

OverlappingOptimum max_welfare_overlapping(const TTG& ttg) {
  const ScaledProfile sp = scaled_profile(ttg);
  const long total = sp.profile.capacity();
  OverlappingOptimum out{sp.profile.at(total), sp.profile.recover(total), {}};
  const Rational total_weight(total);
  auto add_copies = [&](const Rational& threshold, long copies) {
    PartialCoalition c;
    for (const Rational& w : ttg.weights()) c.push_back(w * threshold / total_weight);
    for (long k = 0; k < copies; ++k) out.structure.coalitions.push_back(c);
  };
  long used = 0;
  for (std::size_t j = 0; j < sp.game.tasks().size(); ++j) {
    const long t = to_long(sp.game.tasks()[j].threshold);
    add_copies(sp.game.tasks()[j].threshold, out.tasks.counts[j]);
    used += t * out.tasks.counts[j];
  }
  // Leftover weight goes to copies of the implicit task (1, 0).
  add_copies(Rational(1), total - used);
  return out;
}

PartitionOptimum max_welfare_nonoverlapping(const TTG& ttg, int guard) {
  const int n = ttg.n();
  if (n > guard || n >= 31) throw std::length_error("too many agents for the partition DP");
  const std::uint32_t full = (1U << n) - 1U;
  std::vector<Rational> crisp_value(full + 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    crisp_value[s] = ttg.value_of_weight(ttg.weight_of(AgentSet(s)));
  }
  std::vector<Rational> best(full + 1);
  std::vector<std::uint32_t> block(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1U);
    const std::uint32_t rest = s & ~low;
    bool have = false;
    // Enumerate blocks low | sub for every submask sub of rest.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t t = low | sub;
      Rational cand = crisp_value[t] + best[s & ~t];
      if (!have || cand > best[s] || (cand == best[s] && lex_less(AgentSet(t), AgentSet(block[s])))) {
        best[s] = std::move(cand);
        block[s] = t;
        have = true;
      }
      if (sub == 0) break;
    }
  }
  PartitionOptimum out{best[full], {}};
  for (std::uint32_t s = full; s != 0; s &= ~block[s]) out.partition.emplace_back(block[s]);
  return out;
}

namespace {

struct RuleSearch {
  const RuleGame& game;
  const std::vector<Rational>& capacity;
  int cap;
  std::vector<int> candidates;  // rule indices sorted by value, descending
  std::map<std::vector<int>, bool> memo;
  Rational best = 0;

  bool fundable(const std::vector<int>& multiset) {
    auto it = memo.find(multiset);
    if (it != memo.end()) return it->second;
    lp::LinearProgram program;
    const int n = game.n();
    std::vector<std::vector<int>> var(multiset.size(), std::vector<int>(n, -1));
    for (std::size_t k = 0; k < multiset.size(); ++k) {
      for (const Requirement& req : game.rules()[multiset[k]].requirements) {
        if (req.min <= 0) continue;
        for (int j : req.agents.members()) {
          if (capacity[j] > 0 && var[k][j] < 0) var[k][j] = program.add_variable("c");
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, Rational>> terms;
      for (std::size_t k = 0; k < multiset.size(); ++k) {
        if (var[k][j] >= 0) terms.emplace_back(var[k][j], 1);
      }
      if (!terms.empty()) program.add_constraint(terms, lp::Relation::kLessEqual, capacity[j]);
    }
    for (std::size_t k = 0; k < multiset.size(); ++k) {
      for (const Requirement& req : game.rules()[multiset[k]].requirements) {
        if (req.min <= 0) continue;
        std::vector<std::pair<int, Rational>> terms;
        for (int j : req.agents.members()) {
          if (var[k][j] >= 0) terms.emplace_back(var[k][j], 1);
        }
        program.add_constraint(terms, lp::Relation::kGreaterEqual, req.min);
      }
    }
    const bool ok = lp::solve(program).feasible();
    memo.emplace(multiset, ok);
    return ok;
  }

  void dfs(std::size_t pos, std::vector<int>& chosen, const Rational& current) {
    if (current > best) best = current;
    if (static_cast<int>(chosen.size()) == cap) return;
    const int slots = cap - static_cast<int>(chosen.size());
    for (std::size_t i = pos; i < candidates.size(); ++i) {
      const Rational& v = game.rules()[candidates[i]].value;
      if (current + slots * v <= best) break;
      chosen.push_back(candidates[i]);
      std::vector<int> key = chosen;
      std::sort(key.begin(), key.end());
      if (fundable(key)) dfs(i, chosen, current + v);
      chosen.pop_back();
    }
  }
};

}  // namespace

Rational rule_cover(const RuleGame& game, const std::vector<Rational>& capacity, int cap) {
  if (cap < 1) throw std::invalid_argument("structure cap must be positive");
  RuleSearch search{game, capacity, cap, {}, {}, 0};
  for (std::size_t r = 0; r < game.rules().size(); ++r) {
    const Rule& rule = game.rules()[r];
    if (rule.value <= 0) continue;
    bool possible = true;
    for (const Requirement& req : rule.requirements) {
      Rational reach = 0;
      for (int j : req.agents.members()) reach += capacity[j];
      if (reach < req.min) possible = false;
    }
    if (possible) search.candidates.push_back(static_cast<int>(r));
  }
  std::stable_sort(search.candidates.begin(), search.candidates.end(), [&](int a, int b) {
    return game.rules()[a].value > game.rules()[b].value;
  });
  std::vector<int> chosen;
  search.dfs(0, chosen, Rational(0));
  return search.best;
}

Rational vstar(const Game& game, AgentSet s, Resolution resolution) {
  CoverOracle oracle(game, resolution);
  return oracle(s);
}

CoverOracle::CoverOracle(const Game& game, Resolution resolution)
    : game_(game), resolution_(resolution) {
  if (game_.is_ttg()) profile_ = scaled_profile(game_.ttg());
}

Rational CoverOracle::operator()(AgentSet s) {
  if (s.empty()) return 0;
  if (!s.subset_of(AgentSet::all(game_.n()))) throw std::out_of_range("agent set outside N");
  auto it = cache_.find(s.mask());
  if (it != cache_.end()) return it->second;
  Rational v;
  if (profile_) {
    v = profile_->profile.at(profile_->scaled_weight(s));
  } else {
    std::vector<Rational> capacity(game_.n());
    for (int j : s.members()) capacity[j] = game_.weights()[j];
    v = rule_cover(game_.rule_game(), capacity, resolution_.cap);
  }
  cache_.emplace(s.mask(), v);
  return v;
}

}  // namespace ocf
