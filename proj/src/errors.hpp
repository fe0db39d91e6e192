// Copyright 2026 The qsi developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qsi {

// Stable failure categories; mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  invalid_argument = 1,
  parse_error = 2,
  not_hermitian = 3,
  not_positive_definite = 4,
  trace_not_one = 5,
  convergence_failure = 6,
  dimension_mismatch = 7,
  domain_error = 8,
  not_regular = 9,
  quadrature_failure = 10,
  integrability_failure = 11,
  unsupported_continuation = 12,
  branch_tracking_failure = 13,
  weight_unavailable = 14,
  method_disagreement = 15,
  numerical_inconsistency = 16,
  io_error = 17,
  internal_error = 18,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qsi
