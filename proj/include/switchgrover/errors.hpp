// Copyright 2026 The switchgrover Authors
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

namespace sg {

// Operand shapes do not line up (non-square input, mismatched d, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scalar parameter lies outside its admissible range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Kraus set or density matrix fails its defining constraint.
class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested size exceeds a configured cap (qubits, switch levels).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Post-selection on an outcome whose probability is numerically zero.
class DegenerateBranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed form requested outside the iteration counts it exists for.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sg
