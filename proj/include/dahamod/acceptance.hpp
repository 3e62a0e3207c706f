/*
 Copyright 2026 The dahamod Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dahamod {

struct AcceptanceOptions {
  std::uint64_t seed = 20261018;
  // < 0: full sizes; 0: fixed structural examples only; > 0: samples per group.
  int grid = -1;
  bool rational = true;
  bool ratfun = true;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// One line per criterion.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace dahamod
