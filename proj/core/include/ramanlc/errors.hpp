// Copyright 2026 The ramanlc Authors
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

namespace ramanlc {

// Invalid user-supplied parameters or configuration (CLI exit code 2).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Failures during computation (CLI exit code 3).
struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateDetuning : ValidationError {
  using ValidationError::ValidationError;
};
struct SlotOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidSize : ValidationError {
  using ValidationError::ValidationError;
};
struct SampleBudgetTooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct BudgetExceeded : ValidationError {
  using ValidationError::ValidationError;
};
struct NotInformationallyComplete : ValidationError {
  using ValidationError::ValidationError;
};

struct NonConvergence : RuntimeError {
  using RuntimeError::RuntimeError;
};
struct SlotUnscattered : RuntimeError {
  using RuntimeError::RuntimeError;
};
struct NoCrossing : RuntimeError {
  using RuntimeError::RuntimeError;
};
struct OptimizerStall : RuntimeError {
  using RuntimeError::RuntimeError;
};

}  // namespace ramanlc
