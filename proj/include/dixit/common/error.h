// Copyright 2026 The Dixit Challenge Authors
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

#ifndef DIXIT_COMMON_ERROR_H_
#define DIXIT_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dixit {

// Every failure the library reports carries one of these codes. The names are
// part of the wire protocol (Error messages carry ErrorCodeName()).
enum class ErrorCode {
  // Engine.
  kDeckTooSmall,
  kDuplicateCardId,
  kInvalidDeck,
  kInvalidConfig,
  kWrongPhase,
  kCardNotInHand,
  kPhraseTooLong,
  kInvalidPhrase,
  kAlreadySubmitted,
  kStorytellerCannotAct,
  kOwnCardVote,
  kUnknownCard,
  kUnknownPlayer,
  // Vote model.
  kEmptyTable,
  kBadTemperature,
  kBadScore,
  kProbabilityOutOfRange,
  kTooLargeToEnumerate,
  kSizeMismatch,
  // Agents.
  kEmptyUnseenPool,
  kEmptyLexicon,
  kOwnCardOnlyCard,
  kInvalidArgument,
  // Files.
  kParseError,
  kIoError,
  kCorruptTranscript,
  // Server.
  kSeatCountInvalid,
  kProtocolViolation,
  kTimeout,
  kUnknownSession,
};

std::string_view ErrorCodeName(ErrorCode code);

class DixitError : public std::runtime_error {
 public:
  DixitError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace dixit

#endif  // DIXIT_COMMON_ERROR_H_
