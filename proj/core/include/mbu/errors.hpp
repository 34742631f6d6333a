// Copyright 2026 The mbu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mbu {

// Malformed arguments: bad indices, width mismatches, overlapping registers.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// gcd(a, N) != 1, so the multiplier has no inverse modulo N.
class NoInverseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A forced measurement outcome whose probability is below the zero threshold.
class ZeroProbabilityOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request that would exceed a size guardrail (enumeration or simulation).
class GuardrailExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mbu
