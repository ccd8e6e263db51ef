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

#ifndef OCF_AGENT_SET_HPP
#define OCF_AGENT_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ocf {

// Agents are 0-based internally and printed 1-based.
inline constexpr int kMaxAgents = 32;

class AgentSet {
 public:
  constexpr AgentSet() = default;
  constexpr explicit AgentSet(std::uint32_t mask) : mask_(mask) {}

  static AgentSet of(std::initializer_list<int> members);
  static AgentSet of(const std::vector<int>& members);
  static AgentSet all(int n);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int agent) const { return (mask_ >> agent) & 1U; }
  int size() const;
  std::vector<int> members() const;

  AgentSet with(int agent) const { return AgentSet(mask_ | (1U << agent)); }
  AgentSet without(int agent) const { return AgentSet(mask_ & ~(1U << agent)); }
  bool subset_of(AgentSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(AgentSet other) const { return (mask_ & other.mask_) != 0; }

  friend AgentSet operator|(AgentSet a, AgentSet b) { return AgentSet(a.mask_ | b.mask_); }
  friend AgentSet operator&(AgentSet a, AgentSet b) { return AgentSet(a.mask_ & b.mask_); }
  friend AgentSet operator-(AgentSet a, AgentSet b) { return AgentSet(a.mask_ & ~b.mask_); }
  friend bool operator==(AgentSet a, AgentSet b) = default;

  // "{1,3}" in 1-based labels.
  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

// Orders sets by their sorted 1-based member lists, lexicographically.
bool lex_less(AgentSet a, AgentSet b);

// Every nonempty subset of `universe`, in lex_less order.
std::vector<AgentSet> nonempty_subsets(AgentSet universe);

struct AgentSetLess {
  bool operator()(AgentSet a, AgentSet b) const { return lex_less(a, b); }
};

}  // namespace ocf

#endif  // OCF_AGENT_SET_HPP
