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

#include "ocf/examples.hpp"

#include <exception>
#include <sstream>

#include "ocf/core.hpp"
#include "ocf/corpus.hpp"
#include "ocf/deviations.hpp"
#include "ocf/fuzzy.hpp"
#include "ocf/welfare.hpp"

namespace ocf {
namespace {

std::string payoffs_text(const PayoffVector& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.size(); ++j) out += (j ? "," : "") + to_string(p[j]);
  return out + ")";
}

// Found deviation that re-validates, with a summary of the gains.
bool deviation_found(const Game& game, const Outcome& outcome, AgentSet j, DeviationKind kind,
                     std::string& detail) {
  const DeviationResult r = find_deviation(game, outcome, j, kind);
  if (!r.found) {
    detail = "no deviation";
    return false;
  }
  const ValidationReport check = validate_deviation(game, outcome, r);
  std::ostringstream os;
  for (int a : j.members()) os << "agent " << a + 1 << " " << r.before[a] << " -> " << r.after[a] << "; ";
  os << (check.ok() ? "re-validated" : "INVALID: " + check.violations.front());
  detail = os.str();
  return check.ok();
}

bool membership(const Game& game, const Outcome& outcome, DeviationKind kind, std::string& detail) {
  const DeviationVerdict v = core_membership(game, outcome, kind);
  detail = v.stable ? "no deviating set"
                    : "deviating set " + v.deviation->plan.deviators.to_string();
  return v.stable;
}

}  // namespace

std::vector<ExampleRecord> example_records() {
  using namespace corpus;
  std::vector<ExampleRecord> r;

  r.push_back({"pairs-of-three", "overlapping welfare is 2", true, [](std::string& d) {
                 const Rational v = max_welfare_overlapping(pairs_of_three()).value;
                 d = "got " + to_string(v);
                 return v == 2;
               }});
  r.push_back({"pairs-of-three", "non-overlapping welfare is 1", true, [](std::string& d) {
                 const Rational v = max_welfare_nonoverlapping(pairs_of_three()).value;
                 d = "got " + to_string(v);
                 return v == 1;
               }});
  r.push_back({"pairs-of-three", "stated outcome is in the o-core", true, [](std::string& d) {
                 return membership(Game(pairs_of_three()), pairs_of_three_outcome(),
                                   DeviationKind::kOptimistic, d);
               }});

  r.push_back({"two-task-pair", "(CS, x) pays (16,14)", true, [](std::string& d) {
                 const PayoffVector p = payoff_vector(two_task_pair_x(), 2);
                 d = payoffs_text(p);
                 return p == PayoffVector{16, 14};
               }});
  r.push_back({"two-task-pair", "(CS, x) fails the c-core test, blocked by {2}", true,
               [](std::string& d) {
                 const CoreVerdict v = ttg_membership(two_task_pair(), two_task_pair_x());
                 if (v.stable) return false;
                 d = v.witness->set.to_string() + ": " + to_string(v.witness->achievable) + " > " +
                     to_string(v.witness->payoff);
                 return v.witness->set == AgentSet::of({1});
               }});
  r.push_back({"two-task-pair", "(CS, y) is in the c-core", true, [](std::string& d) {
                 const CoreVerdict v = ttg_membership(two_task_pair(), two_task_pair_y());
                 d = v.stable ? "stable" : "blocked by " + v.witness->set.to_string();
                 return v.stable;
               }});
  r.push_back({"two-task-pair", "agent 2 r-deviates from (CS, y)", true, [](std::string& d) {
                 return deviation_found(Game(two_task_pair()), two_task_pair_y(), AgentSet::of({1}),
                                        DeviationKind::kRefined, d);
               }});
  r.push_back({"two-task-pair", "(CS', x') is in the r-core", true, [](std::string& d) {
                 return membership(Game(two_task_pair()), two_task_pair_even_x(),
                                   DeviationKind::kRefined, d);
               }});
  r.push_back({"two-task-pair", "agents 1 and 2 r-deviate from (CS'', z) earning 30", true,
               [](std::string& d) {
                 const Game g(two_task_pair());
                 const Outcome z = two_task_pair_lopsided();
                 const DeviationResult res = find_r_deviation(g, z, AgentSet::of({0, 1}));
                 if (!deviation_found(g, z, AgentSet::of({0, 1}), DeviationKind::kRefined, d)) return false;
                 return res.after[0] + res.after[1] == 30;
               }});
  r.push_back({"two-task-pair", "agent 2 o-deviates from (CS', x')", true, [](std::string& d) {
                 return deviation_found(Game(two_task_pair()), two_task_pair_even_x(),
                                        AgentSet::of({1}), DeviationKind::kOptimistic, d);
               }});
  r.push_back({"two-task-pair", "(CS', y) is in the o-core", true, [](std::string& d) {
                 return membership(Game(two_task_pair()), two_task_pair_even_y(),
                                   DeviationKind::kOptimistic, d);
               }});

  r.push_back({"seven-agent-rules", "stated outcome meets the cover condition", true,
               [](std::string& d) {
                 const CoreVerdict v =
                     check_cover_condition(Game(seven_agent_rules()), seven_agent_rules_outcome());
                 if (!v.stable) {
                   d = "blocked by " + v.witness->set.to_string() + ": " +
                       to_string(v.witness->achievable) + " > " + to_string(v.witness->payoff);
                 }
                 return v.stable;
               }});
  r.push_back({"seven-agent-rules", "agents 2, 3, 6, 7 r-deviate when agent 5 earns from r4", true,
               [](std::string& d) {
                 return deviation_found(Game(seven_agent_rules()), seven_agent_rules_outcome(1),
                                        AgentSet::of({1, 2, 5, 6}), DeviationKind::kRefined, d);
               }});

  r.push_back({"three-heavy-rules", "stated outcome is in the r-core", true, [](std::string& d) {
                 return membership(Game(three_heavy_rules()), three_heavy_rules_outcome(),
                                   DeviationKind::kRefined, d);
               }});
  r.push_back({"three-heavy-rules", "agents 2 and 3 o-deviate when agent 1 earns from r2", true,
               [](std::string& d) {
                 return deviation_found(Game(three_heavy_rules()), three_heavy_rules_skewed(),
                                        AgentSet::of({1, 2}), DeviationKind::kOptimistic, d);
               }});

  r.push_back({"heavy-and-two-light", "the c-core is empty", true, [](std::string& d) {
                 const CoreVerdict v = stabilize(heavy_and_two_light());
                 d = v.detail;
                 return !v.stable;
               }});
  r.push_back({"heavy-and-two-light", "{{1},{2,3}} with (100,1/2,1/2) is non-overlapping stable", true,
               [](std::string& d) {
                 const CoreVerdict v =
                     nonoverlapping_core_check(heavy_and_two_light(), heavy_and_two_light_partition(),
                                               heavy_and_two_light_payoffs());
                 d = v.stable ? "stable" : "blocked by " + v.witness->set.to_string();
                 return v.stable;
               }});

  r.push_back({"fuzzy-gap", "(10,10) fails the Aubin core at (7/10,7/10)", true, [](std::string& d) {
                 const FuzzyCheckReport a = aubin_core_check(fuzzy_gap(), {10, 10});
                 if (a.holds) return false;
                 d = "witness " + payoffs_text(*a.witness) + ": " + to_string(a.payment) + " < " +
                     to_string(a.value);
                 return *a.witness == FuzzyCoalition{Rational(7, 10), Rational(7, 10)};
               }});
  r.push_back({"fuzzy-gap", "(10,10) is in the f-core", true, [](std::string& d) {
                 const FuzzyCheckReport f = f_core_check(fuzzy_gap(), {10, 10});
                 d = f.holds ? "holds" : "fails";
                 return f.holds;
               }});
  r.push_back({"fuzzy-gap", "stated outcome is in the o-core", true, [](std::string& d) {
                 return membership(Game(fuzzy_gap()), fuzzy_gap_outcome(), DeviationKind::kOptimistic, d);
               }});
  return r;
}

std::vector<ExampleResult> run_examples(const std::vector<ExampleRecord>& records) {
  std::vector<ExampleResult> out;
  for (const ExampleRecord& rec : records) {
    ExampleResult res{rec.id, rec.claim, rec.expected, false, {}};
    try {
      res.actual = rec.run(res.detail);
    } catch (const std::exception& e) {
      res.actual = !rec.expected;
      res.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::string format_report(const std::vector<ExampleResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const ExampleResult& r : results) {
    passed += r.passed();
    os << (r.passed() ? "PASS " : "FAIL ") << r.id << ": " << r.claim;
    if (!r.expected) os << " [expected false]";
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  os << passed << "/" << results.size() << " records pass\n";
  return os.str();
}

}  // namespace ocf
