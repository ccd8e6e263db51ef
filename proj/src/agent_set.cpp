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

#include "ocf/agent_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ocf {

AgentSet AgentSet::of(std::initializer_list<int> members) {
  return of(std::vector<int>(members));
}

AgentSet AgentSet::of(const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int j : members) {
    if (j < 0 || j >= kMaxAgents) throw std::out_of_range("agent index out of range");
    mask |= 1U << j;
  }
  return AgentSet(mask);
}

AgentSet AgentSet::all(int n) {
  if (n < 0 || n > kMaxAgents) throw std::out_of_range("agent count out of range");
  return AgentSet(n == kMaxAgents ? ~0U : ((1U << n) - 1U));
}

int AgentSet::size() const { return std::popcount(mask_); }

std::vector<int> AgentSet::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string AgentSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int j : members()) {
    if (!first) out += ",";
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

bool lex_less(AgentSet a, AgentSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<AgentSet> nonempty_subsets(AgentSet universe) {
  std::vector<AgentSet> out;
  const auto elems = universe.members();
  // Depth-first generation of sorted member lists yields lex order directly.
  auto recurse = [&](auto&& self, std::size_t start, std::uint32_t mask) -> void {
    for (std::size_t i = start; i < elems.size(); ++i) {
      const std::uint32_t next = mask | (1U << elems[i]);
      out.emplace_back(next);
      self(self, i + 1, next);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace ocf
