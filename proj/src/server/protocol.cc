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

#include "dixit/server/protocol.h"

#include "dixit/common/error.h"

namespace dixit::server {

namespace {

constexpr MessageType kAllTypes[] = {
    MessageType::kJoinLobby,   MessageType::kLobbyState,
    MessageType::kGameStart,   MessageType::kStateUpdate,
    MessageType::kSubmitPhrase, MessageType::kSubmitCard,
    MessageType::kSubmitVote,  MessageType::kRoundResult,
    MessageType::kExplanation, MessageType::kGameEnd,
    MessageType::kError,
};

void RequireString(const nlohmann::json& payload, const char* field) {
  auto it = payload.find(field);
  if (it == payload.end() || !it->is_string()) {
    Fail(ErrorCode::kProtocolViolation,
         std::string("payload needs string field \"") + field + "\"");
  }
}

}  // namespace

std::string_view MessageTypeName(MessageType type) {
  switch (type) {
    case MessageType::kJoinLobby: return "JoinLobby";
    case MessageType::kLobbyState: return "LobbyState";
    case MessageType::kGameStart: return "GameStart";
    case MessageType::kStateUpdate: return "StateUpdate";
    case MessageType::kSubmitPhrase: return "SubmitPhrase";
    case MessageType::kSubmitCard: return "SubmitCard";
    case MessageType::kSubmitVote: return "SubmitVote";
    case MessageType::kRoundResult: return "RoundResult";
    case MessageType::kExplanation: return "Explanation";
    case MessageType::kGameEnd: return "GameEnd";
    case MessageType::kError: return "Error";
  }
  return "?";
}

std::optional<MessageType> MessageTypeFromName(std::string_view name) {
  for (MessageType type : kAllTypes) {
    if (MessageTypeName(type) == name) return type;
  }
  return std::nullopt;
}

bool IsClientMessage(MessageType type) {
  return type == MessageType::kJoinLobby ||
         type == MessageType::kSubmitPhrase ||
         type == MessageType::kSubmitCard || type == MessageType::kSubmitVote;
}

nlohmann::json MessageToJson(const SessionMessage& message) {
  return {{"type", MessageTypeName(message.type)},
          {"seq", message.seq},
          {"payload", message.payload}};
}

std::string SerializeMessage(const SessionMessage& message) {
  return MessageToJson(message).dump();
}

SessionMessage ClientMessageFromJson(const nlohmann::json& envelope) {
  if (!envelope.is_object() || !envelope.contains("type") ||
      !envelope["type"].is_string()) {
    Fail(ErrorCode::kProtocolViolation, "envelope needs a string \"type\"");
  }
  const std::string name = envelope["type"].get<std::string>();
  std::optional<MessageType> type = MessageTypeFromName(name);
  if (!type) Fail(ErrorCode::kProtocolViolation, "unknown type '" + name + "'");
  if (!IsClientMessage(*type)) {
    Fail(ErrorCode::kProtocolViolation,
         "clients may not send '" + name + "' messages");
  }
  SessionMessage message;
  message.type = *type;
  if (envelope.contains("seq")) {
    if (!envelope["seq"].is_number_unsigned()) {
      Fail(ErrorCode::kProtocolViolation, "\"seq\" must be an unsigned integer");
    }
    message.seq = envelope["seq"].get<std::uint64_t>();
  }
  if (envelope.contains("payload")) message.payload = envelope["payload"];
  if (!message.payload.is_object()) {
    Fail(ErrorCode::kProtocolViolation, "\"payload\" must be an object");
  }
  switch (message.type) {
    case MessageType::kSubmitPhrase:
      RequireString(message.payload, "card");
      RequireString(message.payload, "phrase");
      break;
    case MessageType::kSubmitCard:
    case MessageType::kSubmitVote:
      RequireString(message.payload, "card");
      break;
    default:
      break;
  }
  return message;
}

SessionMessage ParseClientMessage(std::string_view text) {
  nlohmann::json envelope =
      nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (envelope.is_discarded()) {
    Fail(ErrorCode::kProtocolViolation, "frame is not valid JSON");
  }
  return ClientMessageFromJson(envelope);
}

}  // namespace dixit::server
