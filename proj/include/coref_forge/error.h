// Copyright 2026 The coref-forge Authors.
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

#ifndef COREF_FORGE_ERROR_H_
#define COREF_FORGE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coref_forge {

enum class ErrorCode {
  kUnbalancedBracket,
  kBadColumnCount,
  kBadCorefMarker,
  kDuplicateDocId,
  kInvalidDocument,
  kMalformedInput,
  kMissingParadigmSlot,
  kConflictingEntry,
  kEmptyRemappedSpan,
  kNoEligibleCluster,
  kTokenMismatch,
  kMissingDocument,
  kEmptySet,
  kWrongAnnotatorCount,
  kInvalidArgument,
  kIo,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedBracket: return "UnbalancedBracket";
    case ErrorCode::kBadColumnCount: return "BadColumnCount";
    case ErrorCode::kBadCorefMarker: return "BadCorefMarker";
    case ErrorCode::kDuplicateDocId: return "DuplicateDocId";
    case ErrorCode::kInvalidDocument: return "InvalidDocument";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kMissingParadigmSlot: return "MissingParadigmSlot";
    case ErrorCode::kConflictingEntry: return "ConflictingEntry";
    case ErrorCode::kEmptyRemappedSpan: return "EmptyRemappedSpan";
    case ErrorCode::kNoEligibleCluster: return "NoEligibleCluster";
    case ErrorCode::kTokenMismatch: return "TokenMismatch";
    case ErrorCode::kMissingDocument: return "MissingDocument";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kWrongAnnotatorCount: return "WrongAnnotatorCount";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

// All library failures are reported as Error. The code is stable and meant
// for callers; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coref_forge

#endif  // COREF_FORGE_ERROR_H_
