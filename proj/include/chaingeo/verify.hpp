// Copyright 2026 The chaingeo Authors
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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chaingeo {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double value = 0.0;      ///< measured quantity (residual, deviation, ...)
  double tolerance = 0.0;  ///< threshold it was compared against
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t n = 20000;  ///< Monte-Carlo sample count
  int threads = 1;
};

std::vector<std::string> suite_names();

/// Runs one invariant suite, or every suite for "all". Throws DomainError
/// for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace chaingeo
