// Copyright 2026 The Hybrid Mechanisms Authors.
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

#ifndef HYBRID_ERRORS_H_
#define HYBRID_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hybrid {

enum class ErrorCode {
  kDegenerateExpert,
  kDegenerateBids,
  kInvalidArgument,
  kParse,
  kNonMonotone,
  kWrongClass,
  kNotDeterministic,
  kZeroWelfare,
  kUnknownMechanism,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `field()` names the offending input
// field for load errors and is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace hybrid

#endif  // HYBRID_ERRORS_H_
