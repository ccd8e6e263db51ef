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

// Command-line front end. Exit codes: 0 stable or success, 1 unstable or
// empty (a witness is printed), 2 usage or validation error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ocf/convexity.hpp"
#include "ocf/core.hpp"
#include "ocf/deviations.hpp"
#include "ocf/examples.hpp"
#include "ocf/fuzzy.hpp"
#include "ocf/io.hpp"
#include "ocf/random.hpp"
#include "ocf/reductions.hpp"
#include "ocf/welfare.hpp"

namespace {

using namespace ocf;
using io::Json;

constexpr int kStable = 0;
constexpr int kUnstable = 1;
constexpr int kError = 2;

struct Options {
  std::string game_path;
  std::string outcome_path;
  std::string out_path;
  int cap = 3;
  int grid = 1;
  int guard = kDefaultSubsetGuard;
};

Game load_game(const Options& o) {
  if (o.game_path.empty()) throw std::invalid_argument("--game is required");
  return io::game_from_json(io::read_json(o.game_path));
}

Outcome load_outcome(const Options& o, int n) {
  if (o.outcome_path.empty()) throw std::invalid_argument("--outcome is required");
  return io::outcome_from_json(io::read_json(o.outcome_path), n);
}

const TTG& require_ttg(const Game& g) {
  if (!g.is_ttg()) throw std::invalid_argument("this check needs a threshold task game");
  return g.ttg();
}

// Individual rationality is left to the checks themselves: a short agent
// shows up as a singleton deviation, so only the other rules are fatal here.
bool well_formed(const Game& g, const Outcome& outcome, Resolution res) {
  bool ok = true;
  for (const std::string& v : validate_outcome(g, outcome, res).violations) {
    if (v.starts_with("(c)")) continue;
    std::cerr << "invalid outcome: " << v << "\n";
    ok = false;
  }
  return ok;
}

void emit(const Options& o, const Json& doc) {
  if (o.out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    io::write_json(o.out_path, doc);
  }
}

std::string text(const PayoffVector& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.size(); ++j) out += (j ? "," : "") + to_string(p[j]);
  return out + ")";
}

int report(const CoreVerdict& v) {
  if (v.stable) {
    std::cout << "stable\n";
    return kStable;
  }
  std::cout << "unstable";
  if (v.witness) {
    std::cout << ": " << v.witness->set.to_string() << " can secure " << to_string(v.witness->achievable)
              << " but receives " << to_string(v.witness->payoff);
  }
  std::cout << "\n";
  return kUnstable;
}

int report(const FuzzyCheckReport& r) {
  if (r.holds) {
    std::cout << "holds\n";
    return kStable;
  }
  std::cout << "fails: r = " << text(*r.witness) << ", value " << to_string(r.value) << " > payment "
            << to_string(r.payment) << "\n";
  return kUnstable;
}

void print_certificate(const BalancedCollection& c) {
  std::cout << "balanced collection:\n";
  for (const auto& [s, weight] : c.lambda) std::cout << "  lambda " << s.to_string() << " = " << to_string(weight) << "\n";
  for (std::size_t i = 0; i < c.mu.size(); ++i) std::cout << "  mu " << i + 1 << " = " << to_string(c.mu[i]) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping coalition formation: welfare, core checks and deviations"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool outcome) {
    sub->add_option("--game", o.game_path, "game file (JSON)");
    if (outcome) sub->add_option("--outcome", o.outcome_path, "outcome file (JSON)");
    sub->add_option("--cap", o.cap, "most coalitions in a structure")->check(CLI::PositiveNumber);
    sub->add_option("--grid", o.grid, "contribution grid denominator")->check(CLI::PositiveNumber);
    sub->add_option("--guard", o.guard, "largest n for subset enumeration")->check(CLI::PositiveNumber);
  };

  auto* welfare = app.add_subcommand("welfare", "maximum social welfare");
  common(welfare, false);
  bool nonoverlapping = false;
  welfare->add_flag("--nonoverlapping", nonoverlapping, "best partition instead of overlapping structure");
  welfare->add_option("--out", o.out_path, "write the optimal structure here");

  auto* check = app.add_subcommand("check-core", "test an outcome or payoff vector for stability");
  common(check, true);
  std::string kind = "c";
  std::string payoffs_text;
  std::string partition_text;
  check->add_option("--kind", kind, "c|cover|r|o|aubin|f|nonoverlapping")
      ->check(CLI::IsMember({"c", "cover", "r", "o", "aubin", "f", "nonoverlapping"}));
  check->add_option("--payoffs", payoffs_text, "payoff vector, e.g. 10,10");
  check->add_option("--partition", partition_text, "partition, e.g. 1|2,3");

  auto* stab = app.add_subcommand("stabilize", "find a c-stable outcome or certify emptiness");
  common(stab, false);
  std::string structure_path;
  stab->add_option("--structure", structure_path, "fix this structure (outcome file, payoffs ignored)");
  stab->add_option("--partition", partition_text, "non-overlapping: fix this partition");
  stab->add_option("--out", o.out_path, "write the outcome here");

  auto* balanced = app.add_subcommand("balanced", "balancedness certificate for a structure");
  common(balanced, false);
  balanced->add_option("--structure", structure_path, "structure (outcome file)")->required();

  auto* deviate = app.add_subcommand("deviate", "search a profitable deviation of a set");
  common(deviate, true);
  std::string set_text;
  deviate->add_option("--kind", kind, "c|r|o")->check(CLI::IsMember({"c", "r", "o"}));
  deviate->add_option("--set", set_text, "deviating agents, e.g. 2,3")->required();
  deviate->add_option("--out", o.out_path, "write the deviation outcome here");

  auto* convexity = app.add_subcommand("convexity", "convexity falsifier and core construction");
  common(convexity, false);
  bool construct = false;
  bool falsify = false;
  std::string order_text;
  long budget = 0;
  convexity->add_flag("--construct", construct, "build a c-core element round by round");
  convexity->add_flag("--falsify", falsify, "look for a convexity violation");
  convexity->add_option("--order", order_text, "agent ordering, e.g. 1,2,3");
  convexity->add_option("--budget", budget, "most triples to check (0: all)");
  convexity->add_option("--out", o.out_path, "write the constructed outcome here");

  auto* examples = app.add_subcommand("examples", "run the built-in corpus checks");

  auto* gen = app.add_subcommand("gen", "generate instances");
  std::uint64_t seed = 1;
  RandomTtgOptions ttg_opts;
  RandomRuleOptions rule_opts;
  bool rules = false;
  std::string reduction;
  std::string problem_path;
  std::string out_game;
  std::string out_outcome;
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--agents", ttg_opts.agents, "number of agents");
  gen->add_option("--max-weight", ttg_opts.max_weight, "largest agent weight");
  gen->add_option("--max-total", ttg_opts.max_total_weight, "largest total weight (0: none)");
  gen->add_option("--tasks", ttg_opts.tasks, "task types (rule count with --rules)");
  gen->add_option("--max-utility", ttg_opts.max_utility, "largest task utility or rule value");
  gen->add_flag("--rules", rules, "generate a rule-based game");
  gen->add_option("--reduction", reduction, "knapsack|biclique")
      ->check(CLI::IsMember({"knapsack", "biclique"}));
  gen->add_option("--problem", problem_path, "problem file for --reduction");
  gen->add_option("--out", o.out_path, "game file (random mode)");
  gen->add_option("--out-game", out_game, "game file (reduction mode)");
  gen->add_option("--out-outcome", out_outcome, "outcome file (reduction mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kStable : kError;
  }

  try {
    const Resolution res{o.cap, o.grid};
    if (*welfare) {
      const Game g = load_game(o);
      if (nonoverlapping) {
        const PartitionOptimum best = max_welfare_nonoverlapping(require_ttg(g), o.guard);
        std::cout << "welfare " << to_string(best.value) << "\npartition";
        for (AgentSet s : best.partition) std::cout << " " << s.to_string();
        std::cout << "\n";
      } else if (g.is_ttg()) {
        const OverlappingOptimum best = max_welfare_overlapping(g.ttg());
        std::cout << "welfare " << to_string(best.value) << "\n";
        Json doc = io::to_json(Outcome{best.structure, {}});
        doc.erase("payoffs");
        emit(o, doc);
      } else {
        std::cout << "welfare " << to_string(vstar(g, AgentSet::all(g.n()), res)) << "\n";
      }
      return kStable;
    }
    if (*check) {
      const Game g = load_game(o);
      const int n = g.n();
      if (kind == "aubin" || kind == "f" || kind == "nonoverlapping") {
        if (payoffs_text.empty()) throw std::invalid_argument("--payoffs is required for this kind");
        const PayoffVector p = io::parse_payoffs(payoffs_text);
        if (kind == "aubin") return report(aubin_core_check(require_ttg(g), p));
        if (kind == "f") return report(f_core_check(require_ttg(g), p));
        if (partition_text.empty()) throw std::invalid_argument("--partition is required");
        return report(nonoverlapping_core_check(require_ttg(g), io::parse_partition(partition_text, n), p));
      }
      if ((kind == "c" || kind == "cover") && !payoffs_text.empty()) {
        const PayoffVector p = io::parse_payoffs(payoffs_text);
        return report(kind == "c" && g.is_ttg() ? ttg_membership(g.ttg(), p)
                                                : check_cover_condition(g, p, res, o.guard));
      }
      const Outcome outcome = load_outcome(o, n);
      if (!well_formed(g, outcome, res)) return kError;
      if (kind == "c" && g.is_ttg()) return report(ttg_membership(g.ttg(), outcome));
      if (kind == "c" || kind == "cover") return report(check_cover_condition(g, outcome, res, o.guard));
      const DeviationVerdict v = core_membership(g, outcome, parse_deviation_kind(kind), res, o.guard);
      if (v.stable) {
        std::cout << "stable at cap " << o.cap << ", grid 1/" << o.grid << "\n";
        return kStable;
      }
      std::cout << "unstable\n" << v.deviation->narrate();
      return kUnstable;
    }
    if (*stab) {
      const Game g = load_game(o);
      CoreVerdict v;
      if (!partition_text.empty()) {
        v = stabilize_partition(require_ttg(g), io::parse_partition(partition_text, g.n()));
      } else if (!structure_path.empty()) {
        const Outcome shape = io::outcome_from_json(io::read_json(structure_path), g.n());
        v = stabilize_structure(g, shape.structure, res, o.guard);
      } else {
        v = stabilize(require_ttg(g));
      }
      if (v.stable && v.outcome) {
        emit(o, io::to_json(*v.outcome));
        return kStable;
      }
      if (v.stable) {
        std::cout << "stable\n";
        return kStable;
      }
      std::cout << (v.detail.empty() ? "no stable outcome" : v.detail) << "\n";
      if (v.certificate) print_certificate(*v.certificate);
      return kUnstable;
    }
    if (*balanced) {
      const Game g = load_game(o);
      const Outcome shape = io::outcome_from_json(io::read_json(structure_path), g.n());
      const CoreVerdict v = stabilize_structure(g, shape.structure, res, o.guard);
      if (v.stable) {
        std::cout << "balanced: the structure can be stabilized\n";
        return kStable;
      }
      std::cout << "not balanced\n";
      if (v.certificate) print_certificate(*v.certificate);
      return kUnstable;
    }
    if (*deviate) {
      const Game g = load_game(o);
      const Outcome outcome = load_outcome(o, g.n());
      if (!well_formed(g, outcome, res)) return kError;
      const DeviationResult r =
          find_deviation(g, outcome, io::parse_agents(set_text, g.n()), parse_deviation_kind(kind), res);
      std::cout << r.narrate();
      if (!r.found) return kStable;
      emit(o, io::to_json(Outcome{r.plan.structure, r.payoffs}));
      return kUnstable;
    }
    if (*convexity) {
      const Game g = load_game(o);
      if (construct == falsify) throw std::invalid_argument("pick one of --construct and --falsify");
      if (construct) {
        std::vector<int> order;
        if (order_text.empty()) {
          for (int j = 0; j < g.n(); ++j) order.push_back(j);
        } else {
          order = io::parse_ordering(order_text, g.n());
        }
        const ConstructedCore core = construct_core_element(g, order);
        std::cout << "payoffs " << text(payoff_vector(core.outcome, g.n())) << "\n";
        emit(o, io::to_json(core.outcome));
        return kStable;
      }
      const ConvexityReport r = falsify_convexity(g, res, budget);
      std::cout << r.summary() << "\n";
      return r.violation ? kUnstable : kStable;
    }
    if (*examples) {
      const std::vector<ExampleResult> results = run_examples();
      std::cout << format_report(results);
      for (const ExampleResult& r : results) {
        if (!r.passed()) return kUnstable;
      }
      return kStable;
    }
    if (*gen) {
      if (!reduction.empty()) {
        if (problem_path.empty() || out_game.empty() || out_outcome.empty()) {
          throw std::invalid_argument("--problem, --out-game and --out-outcome are required");
        }
        const Json problem = io::read_json(problem_path);
        const ReducedInstance inst = reduction == "knapsack"
                                         ? knapsack_reduction(io::knapsack_from_json(problem))
                                         : biclique_reduction(io::biclique_from_json(problem));
        io::write_json(out_game, io::to_json(Game(inst.game)));
        io::write_json(out_outcome, io::to_json(inst.outcome));
        return kStable;
      }
      Rng rng(seed);
      if (rules) {
        rule_opts.agents = ttg_opts.agents;
        rule_opts.max_weight = ttg_opts.max_weight;
        rule_opts.rules = ttg_opts.tasks;
        rule_opts.max_value = ttg_opts.max_utility;
        emit(o, io::to_json(Game(random_rule_game(rng, rule_opts))));
      } else {
        emit(o, io::to_json(Game(random_ttg(rng, ttg_opts))));
      }
      return kStable;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
