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

#include <stdexcept>
#include <string>

namespace trotterlab {

/// Invalid user-supplied parameters: bad lengths, out-of-range sites, missing
/// sweep parameters. The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested mapping that has no meaning for the given circuit, e.g. asking
/// for the tight-binding chain of a controlled-Rx circuit.
class UnsupportedMapping : public std::logic_error {
 public:
  explicit UnsupportedMapping(const std::string& what) : std::logic_error(what) {}
};

/// A state handed to an analysis routine is not normalized.
class InvalidState : public std::domain_error {
 public:
  explicit InvalidState(const std::string& what) : std::domain_error(what) {}
};

/// Eigensolver failure or residual above contract.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trotterlab
