/*
 * Copyright (c) 2026, the alloph authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alloph {

// Fine-grained error identities. The C API collapses these into a handful of
// status classes; the full code is preserved in the message.
enum class ErrorCode {
  // generic
  kInvalidArgument,
  kIo,
  // feature database
  kMalformedRow,
  kUnknownValue,
  kDanglingAllophone,
  kMissingAttributeColumn,
  kUnknownLanguage,
  kUnknownSegment,
  // inventory mapping
  kBroadcastMismatch,
  kEmptyTarget,
  // numerics
  kShapeMismatch,
  kBadRate,
  kEmptyGroup,
  kIndexOutOfRange,
  kNonFiniteInput,
  // ctc
  kTargetTooLong,
  kTooLarge,
  // model
  kUnknownAttributeValue,
  kTooShort,
  // training
  kEmptyLanguages,
  kUtteranceTooLarge,
  kSpecInvalid,
  kBadCheckpoint,
  // eval
  kEmptyLanguage,
  kNoAttributeHeads,
  kDegenerateInput,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace alloph
