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

#include "dixit/common/error.h"

namespace dixit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDeckTooSmall: return "DeckTooSmall";
    case ErrorCode::kDuplicateCardId: return "DuplicateCardId";
    case ErrorCode::kInvalidDeck: return "InvalidDeck";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kWrongPhase: return "WrongPhase";
    case ErrorCode::kCardNotInHand: return "CardNotInHand";
    case ErrorCode::kPhraseTooLong: return "PhraseTooLong";
    case ErrorCode::kInvalidPhrase: return "InvalidPhrase";
    case ErrorCode::kAlreadySubmitted: return "AlreadySubmitted";
    case ErrorCode::kStorytellerCannotAct: return "StorytellerCannotAct";
    case ErrorCode::kOwnCardVote: return "OwnCardVote";
    case ErrorCode::kUnknownCard: return "UnknownCard";
    case ErrorCode::kUnknownPlayer: return "UnknownPlayer";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kBadTemperature: return "BadTemperature";
    case ErrorCode::kBadScore: return "BadScore";
    case ErrorCode::kProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::kTooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kEmptyUnseenPool: return "EmptyUnseenPool";
    case ErrorCode::kEmptyLexicon: return "EmptyLexicon";
    case ErrorCode::kOwnCardOnlyCard: return "OwnCardOnlyCard";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kCorruptTranscript: return "CorruptTranscript";
    case ErrorCode::kSeatCountInvalid: return "SeatCountInvalid";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kUnknownSession: return "UnknownSession";
  }
  return "Unknown";
}

DixitError::DixitError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void Fail(ErrorCode code, const std::string& message) {
  throw DixitError(code, message);
}

}  // namespace dixit
