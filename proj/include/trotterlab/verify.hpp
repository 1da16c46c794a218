// Copyright 2026 The TrotterLab Authors
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

#include <string>
#include <vector>

namespace trotterlab {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  int passed() const;
  int failed() const;
};

/// Built-in self checks: closed forms against the dense backend, dense
/// against subspace, norm preservation, the two-level and time-reversal
/// properties of the continuous propagator, and first-order Trotter scaling.
VerifyReport run_verification();

}  // namespace trotterlab
