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

#include "alloph/error.hpp"

namespace alloph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnknownValue: return "UnknownValue";
    case ErrorCode::kDanglingAllophone: return "DanglingAllophone";
    case ErrorCode::kMissingAttributeColumn: return "MissingAttributeColumn";
    case ErrorCode::kUnknownLanguage: return "UnknownLanguage";
    case ErrorCode::kUnknownSegment: return "UnknownSegment";
    case ErrorCode::kBroadcastMismatch: return "BroadcastMismatch";
    case ErrorCode::kEmptyTarget: return "EmptyTarget";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kBadRate: return "BadRate";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kTargetTooLong: return "TargetTooLong";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnknownAttributeValue: return "UnknownAttributeValue";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kEmptyLanguages: return "EmptyLanguages";
    case ErrorCode::kUtteranceTooLarge: return "UtteranceTooLarge";
    case ErrorCode::kSpecInvalid: return "SpecInvalid";
    case ErrorCode::kBadCheckpoint: return "BadCheckpoint";
    case ErrorCode::kEmptyLanguage: return "EmptyLanguage";
    case ErrorCode::kNoAttributeHeads: return "NoAttributeHeads";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
  }
  return "Unknown";
}

}  // namespace alloph
