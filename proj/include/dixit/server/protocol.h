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

#ifndef DIXIT_SERVER_PROTOCOL_H_
#define DIXIT_SERVER_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace dixit::server {

// Envelope: {"type": "<MessageType>", "seq": <uint>, "payload": {...}}.
// docs/protocol.md is the normative description of every payload.
enum class MessageType {
  kJoinLobby,     // client -> server
  kLobbyState,
  kGameStart,
  kStateUpdate,
  kSubmitPhrase,  // client -> server
  kSubmitCard,    // client -> server
  kSubmitVote,    // client -> server
  kRoundResult,
  kExplanation,
  kGameEnd,
  kError,
};

std::string_view MessageTypeName(MessageType type);
std::optional<MessageType> MessageTypeFromName(std::string_view name);

// Only card selections, phrases, votes and joining flow from clients.
bool IsClientMessage(MessageType type);

struct SessionMessage {
  MessageType type = MessageType::kError;
  std::uint64_t seq = 0;
  nlohmann::json payload = nlohmann::json::object();
};

nlohmann::json MessageToJson(const SessionMessage& message);
std::string SerializeMessage(const SessionMessage& message);

// Parses and validates a client frame: well-formed envelope, a client
// message type, and the payload fields that type requires. Anything else
// raises kProtocolViolation.
SessionMessage ParseClientMessage(std::string_view text);
SessionMessage ClientMessageFromJson(const nlohmann::json& envelope);

}  // namespace dixit::server

#endif  // DIXIT_SERVER_PROTOCOL_H_
