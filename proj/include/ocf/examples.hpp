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

/// Regression runner over the built-in corpus: each record pairs a check
/// with its expected verdict.

#ifndef OCF_EXAMPLES_HPP
#define OCF_EXAMPLES_HPP

#include <functional>
#include <string>
#include <vector>

namespace ocf {

struct ExampleRecord {
  std::string id;     // corpus instance, e.g. "two-task-pair"
  std::string claim;  // what is checked
  bool expected = true;
  // Returns the observed verdict and may fill in a short detail line.
  std::function<bool(std::string& detail)> run;
};

struct ExampleResult {
  std::string id;
  std::string claim;
  bool expected = true;
  bool actual = false;
  std::string detail;

  bool passed() const { return expected == actual; }
};

std::vector<ExampleRecord> example_records();

std::vector<ExampleResult> run_examples(const std::vector<ExampleRecord>& records);
inline std::vector<ExampleResult> run_examples() { return run_examples(example_records()); }

// One "PASS|FAIL id: claim (detail)" line per record plus a tally line.
std::string format_report(const std::vector<ExampleResult>& results);

}  // namespace ocf

#endif  // OCF_EXAMPLES_HPP
