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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "ocf/corpus.hpp"
#include "ocf/examples.hpp"
#include "ocf/io.hpp"
#include "ocf/random.hpp"

using namespace ocf;
using io::Json;

TEST_SUITE("cli") {
  TEST_CASE("games and outcomes round-trip through JSON") {
    const Game g(corpus::two_task_pair());
    const Game back = io::game_from_json(io::to_json(g));
    CHECK(back.is_ttg());
    CHECK(back.ttg().tasks() == g.ttg().tasks());
    const Game rules(corpus::seven_agent_rules());
    CHECK(io::to_json(io::game_from_json(io::to_json(rules))) == io::to_json(rules));
    const Outcome o = corpus::two_task_pair_y();
    const Outcome o2 = io::outcome_from_json(io::to_json(o), 2);
    CHECK(o2.structure.coalitions == o.structure.coalitions);
    CHECK(o2.payoffs == o.payoffs);
  }

  TEST_CASE("numbers must be exact") {
    CHECK(io::rational_from_json(Json("7/2")) == Rational(7, 2));
    CHECK(io::rational_from_json(Json(3)) == 3);
    CHECK_THROWS(io::rational_from_json(Json(0.5)));
    CHECK_THROWS(io::game_from_json(Json::parse(R"({"type": "ttg", "weights": [1.5], "tasks": []})")));
    CHECK_THROWS(io::game_from_json(Json::parse(R"({"type": "other", "weights": [1]})")));
  }

  TEST_CASE("command-line lists") {
    CHECK(io::parse_payoffs("10,1/2,1/2") == PayoffVector{10, Rational(1, 2), Rational(1, 2)});
    CHECK(io::parse_agents("2,3", 3) == AgentSet::of({1, 2}));
    CHECK_THROWS(io::parse_agents("4", 3));
    const std::vector<AgentSet> part = io::parse_partition("1|2,3", 3);
    REQUIRE(part.size() == 2);
    CHECK(part[1] == AgentSet::of({1, 2}));
    CHECK(io::parse_ordering("3,1,2", 3) == std::vector<int>{2, 0, 1});
    CHECK_THROWS(io::parse_ordering("1,1,2", 3));
  }

  TEST_CASE("random games are reproducible from the seed") {
    RandomTtgOptions o;
    o.agents = 4;
    o.max_weight = 6;
    o.tasks = 2;
    Rng a(42), b(42);
    CHECK(io::to_json(Game(random_ttg(a, o))).dump() == io::to_json(Game(random_ttg(b, o))).dump());
    o.agents = 0;
    CHECK_THROWS(random_ttg(a, o));
    RandomRuleOptions r;
    Rng c(5), d(5);
    CHECK(io::to_json(Game(random_rule_game(c, r))).dump() == io::to_json(Game(random_rule_game(d, r))).dump());
  }

  TEST_CASE("files") {
    const std::string path = (std::filesystem::temp_directory_path() / "ocf_io_test.json").string();
    io::write_json(path, io::to_json(Game(corpus::fuzzy_gap())));
    CHECK(io::game_from_json(io::read_json(path)).ttg().tasks() == corpus::fuzzy_gap().tasks());
    std::filesystem::remove(path);
    CHECK_THROWS(io::read_json(path));
  }

  TEST_CASE("example records") {
    const std::vector<ExampleResult> first = run_examples();
    CHECK(format_report(first) == format_report(run_examples()));
    for (const ExampleResult& r : first) {
      // The cover-condition claim for seven-agent-rules does not hold.
      if (r.id == "seven-agent-rules" && r.claim.starts_with("stated outcome")) {
        CHECK_FALSE(r.passed());
      } else {
        CHECK_MESSAGE(r.passed(), r.id << ": " << r.claim << " (" << r.detail << ")");
      }
    }
  }

  TEST_CASE("an inverted expectation fails exactly that record") {
    std::vector<ExampleRecord> records = example_records();
    std::size_t flipped = records.size();
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].id == "two-task-pair" && records[i].claim == "(CS, y) is in the c-core") flipped = i;
    }
    REQUIRE(flipped < records.size());
    const std::vector<ExampleResult> before = run_examples(records);
    records[flipped].expected = false;
    const std::vector<ExampleResult> after = run_examples(records);
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i == flipped) CHECK_FALSE(after[i].passed());
      else CHECK(after[i].passed() == before[i].passed());
    }
  }
}
