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

/// JSON instance files. Numbers are exact: rational strings such as "7/2"
/// or JSON integers; floating-point literals are rejected. Agents are
/// numbered from 1 in files and on the command line.
///
/// Game:    {"type": "ttg", "weights": [...], "tasks": [{"threshold": t, "utility": u}]}
///          {"type": "rules", "weights": [...],
///           "rules": [{"value": v, "requirements": [{"agents": [1, 5], "min": m}]}]}
/// Outcome: {"coalitions": [[units per agent], ...], "payoffs": [[...], ...], "cap": U}
///          ("cap" optional; contributions are in weight units)
/// Knapsack: {"items": [[size, value], ...], "capacity": B, "target": Z}
/// Biclique: {"left": l, "right": r, "edges": [[1, 2], ...], "target": K}

#ifndef OCF_IO_HPP
#define OCF_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ocf/model.hpp"
#include "ocf/reductions.hpp"

namespace ocf::io {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& value);
Json to_json(const Rational& value);

Game game_from_json(const Json& doc);
Json to_json(const Game& game);

Outcome outcome_from_json(const Json& doc, int n);
Json to_json(const Outcome& outcome);

KnapsackInstance knapsack_from_json(const Json& doc);
BicliqueInstance biclique_from_json(const Json& doc);

Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& doc);

// "10,1/2,1/2"
PayoffVector parse_payoffs(std::string_view text);
// "2,3" -> {1, 2} (0-based inside)
AgentSet parse_agents(std::string_view text, int n);
// "1|2,3"
std::vector<AgentSet> parse_partition(std::string_view text, int n);
// "1,2,3" -> a permutation, 0-based
std::vector<int> parse_ordering(std::string_view text, int n);

}  // namespace ocf::io

#endif  // OCF_IO_HPP
