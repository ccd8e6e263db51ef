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

#include "ocf/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ocf::io {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::vector<Rational> rational_list(const Json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("expected an array of numbers");
  std::vector<Rational> out;
  for (const Json& v : doc) out.push_back(rational_from_json(v));
  return out;
}

Json rational_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_json(v));
  return out;
}

int agent_index(const Json& doc, int n) {
  if (!doc.is_number_integer()) throw std::invalid_argument("agents are integers from 1");
  const long a = doc.get<long>();
  if (a < 1 || a > n) throw std::invalid_argument("agent " + std::to_string(a) + " out of range");
  return static_cast<int>(a - 1);
}

Integer integer_from_json(const Json& doc) {
  const Rational r = rational_from_json(doc);
  if (!is_integer(r)) throw std::invalid_argument("expected an integer, got " + to_string(r));
  return boost::multiprecision::numerator(r);
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(value.get<unsigned long long>()))
                                      : Rational(Integer(value.get<long long>()));
  }
  if (value.is_number_float()) {
    throw std::invalid_argument("floating-point number " + value.dump() +
                                "; write it as a rational string");
  }
  throw std::invalid_argument("expected a number, got " + value.dump());
}

Json to_json(const Rational& value) { return to_string(value); }

Game game_from_json(const Json& doc) {
  const std::string type = field(doc, "type").get<std::string>();
  std::vector<Rational> weights = rational_list(field(doc, "weights"));
  const int n = static_cast<int>(weights.size());
  if (type == "ttg") {
    std::vector<TaskType> tasks;
    for (const Json& t : field(doc, "tasks")) {
      tasks.push_back({rational_from_json(field(t, "threshold")), rational_from_json(field(t, "utility"))});
    }
    return Game(TTG(std::move(weights), std::move(tasks)));
  }
  if (type == "rules") {
    std::vector<Rule> rules;
    for (const Json& r : field(doc, "rules")) {
      Rule rule{{}, rational_from_json(field(r, "value"))};
      for (const Json& q : field(r, "requirements")) {
        AgentSet agents;
        for (const Json& a : field(q, "agents")) agents = agents.with(agent_index(a, n));
        rule.requirements.push_back({agents, rational_from_json(field(q, "min"))});
      }
      rules.push_back(std::move(rule));
    }
    return Game(RuleGame(std::move(weights), std::move(rules)));
  }
  throw std::invalid_argument("unknown game type '" + type + "'");
}

Json to_json(const Game& game) {
  Json out;
  if (game.is_ttg()) {
    out["type"] = "ttg";
    out["weights"] = rational_array(game.weights());
    out["tasks"] = Json::array();
    for (const TaskType& t : game.ttg().tasks()) {
      out["tasks"].push_back({{"threshold", to_json(t.threshold)}, {"utility", to_json(t.utility)}});
    }
    return out;
  }
  out["type"] = "rules";
  out["weights"] = rational_array(game.weights());
  out["rules"] = Json::array();
  for (const Rule& r : game.rule_game().rules()) {
    Json rule;
    rule["value"] = to_json(r.value);
    rule["requirements"] = Json::array();
    for (const Requirement& q : r.requirements) {
      Json agents = Json::array();
      for (int j : q.agents.members()) agents.push_back(j + 1);
      rule["requirements"].push_back({{"agents", agents}, {"min", to_json(q.min)}});
    }
    out["rules"].push_back(std::move(rule));
  }
  return out;
}

Outcome outcome_from_json(const Json& doc, int n) {
  Outcome out;
  for (const Json& c : field(doc, "coalitions")) {
    PartialCoalition coalition = rational_list(c);
    if (static_cast<int>(coalition.size()) != n) {
      throw std::invalid_argument("coalition has " + std::to_string(coalition.size()) +
                                  " entries, game has " + std::to_string(n) + " agents");
    }
    out.structure.coalitions.push_back(std::move(coalition));
  }
  if (doc.contains("payoffs")) {
    for (const Json& row : doc.at("payoffs")) {
      std::vector<Rational> payoffs = rational_list(row);
      if (static_cast<int>(payoffs.size()) != n) throw std::invalid_argument("payoff row has the wrong width");
      out.payoffs.push_back(std::move(payoffs));
    }
  }
  if (doc.contains("cap")) {
    out.structure.cap = static_cast<int>(to_long(rational_from_json(doc.at("cap"))));
  }
  return out;
}

Json to_json(const Outcome& outcome) {
  Json out;
  out["coalitions"] = Json::array();
  for (const PartialCoalition& c : outcome.structure.coalitions) out["coalitions"].push_back(rational_array(c));
  out["payoffs"] = Json::array();
  for (const auto& row : outcome.payoffs) out["payoffs"].push_back(rational_array(row));
  if (outcome.structure.cap) out["cap"] = *outcome.structure.cap;
  return out;
}

KnapsackInstance knapsack_from_json(const Json& doc) {
  KnapsackInstance out{{}, integer_from_json(field(doc, "capacity")), integer_from_json(field(doc, "target"))};
  for (const Json& item : field(doc, "items")) {
    if (!item.is_array() || item.size() != 2) throw std::invalid_argument("items are [size, value] pairs");
    out.items.push_back({integer_from_json(item[0]), integer_from_json(item[1])});
  }
  return out;
}

BicliqueInstance biclique_from_json(const Json& doc) {
  BicliqueInstance out;
  out.left = static_cast<int>(field(doc, "left").get<long>());
  out.right = static_cast<int>(field(doc, "right").get<long>());
  out.target = field(doc, "target").get<long>();
  for (const Json& e : field(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges are [left, right] pairs");
    out.edges.emplace_back(agent_index(e[0], out.left), agent_index(e[1], out.right));
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << doc.dump(2) << "\n";
}

PayoffVector parse_payoffs(std::string_view text) {
  PayoffVector out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

AgentSet parse_agents(std::string_view text, int n) {
  AgentSet out;
  for (std::string_view part : split(text, ',')) {
    const Rational a = parse_rational(part);
    if (!is_integer(a) || a < 1 || a > n) {
      throw std::invalid_argument("agent '" + std::string(part) + "' out of range");
    }
    out = out.with(static_cast<int>(to_long(a)) - 1);
  }
  return out;
}

std::vector<AgentSet> parse_partition(std::string_view text, int n) {
  std::vector<AgentSet> out;
  for (std::string_view block : split(text, '|')) out.push_back(parse_agents(block, n));
  return out;
}

std::vector<int> parse_ordering(std::string_view text, int n) {
  std::vector<int> out;
  for (std::string_view part : split(text, ',')) {
    const Rational a = parse_rational(part);
    if (!is_integer(a) || a < 1 || a > n) {
      throw std::invalid_argument("agent '" + std::string(part) + "' out of range");
    }
    out.push_back(static_cast<int>(to_long(a)) - 1);
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i || static_cast<int>(sorted.size()) != n) {
      throw std::invalid_argument("ordering must list every agent once");
    }
  }
  return out;
}

}  // namespace ocf::io
