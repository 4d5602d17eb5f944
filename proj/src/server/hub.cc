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

#include "dixit/server/hub.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "dixit/common/error.h"
#include "dixit/common/rng.h"
#include "dixit/engine/transcript.h"

namespace dixit::server {

Hub::Hub(ServerConfig config, std::vector<Card> deck,
         std::shared_ptr<const agents::CandidateLexicon> lexicon, Sink sink)
    : config_(std::move(config)),
      deck_(std::move(deck)),
      lexicon_(std::move(lexicon)),
      sink_(std::move(sink)) {
  ValidateServerConfig(config_);
  ValidateDeck(deck_);
}

std::size_t Hub::num_sessions() const {
  std::lock_guard lock(mu_);
  return slots_.size();
}

std::size_t Hub::num_finished() const {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::lock_guard lock(mu_);
    slots = slots_;
  }
  std::size_t finished = 0;
  for (const auto& slot : slots) {
    std::lock_guard lock(slot->mu);
    finished += slot->session.finished();
  }
  return finished;
}

void Hub::OnConnect(ConnectionId) {}

void Hub::OnDisconnect(ConnectionId connection) {
  std::shared_ptr<Slot> slot;
  int participant = -1;
  {
    std::lock_guard lock(mu_);
    auto it = bindings_.find(connection);
    if (it == bindings_.end()) return;
    slot = it->second.slot;
    participant = it->second.participant;
    bindings_.erase(it);
  }
  std::lock_guard lock(slot->mu);
  auto it = slot->connections.find(participant);
  if (it != slot->connections.end() && it->second == connection) {
    slot->connections.erase(it);
  }
}

void Hub::SendDirect(ConnectionId connection, ErrorCode code,
                     const std::string& message) {
  SessionMessage error;
  error.type = MessageType::kError;
  error.seq = 0;  // not part of any session stream
  error.payload = {{"code", ErrorCodeName(code)}, {"message", message}};
  sink_(connection, SerializeMessage(error));
}

std::string Hub::NewToken() {
  std::random_device device;
  std::uint64_t hi = (std::uint64_t{device()} << 32) | device();
  std::uint64_t lo = (std::uint64_t{device()} << 32) | device();
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

std::uint64_t Hub::NewSeed() {
  if (config_.seed) return DeriveSeed(*config_.seed, {next_session_});
  std::random_device device;
  return (std::uint64_t{device()} << 32) | device();
}

std::shared_ptr<Hub::Slot> Hub::NewLobby() {
  char id[32];
  std::snprintf(id, sizeof(id), "session-%04llu",
                static_cast<unsigned long long>(++next_session_));
  auto slot = std::shared_ptr<Slot>(
      new Slot{{}, GameSession(id, config_.session, deck_, lexicon_), {}, false});
  for (int a = 0; a < config_.agent_seats; ++a) {
    agents::AgentSpec spec = config_.agent;
    if (config_.agent_seats > 1) spec.name += "-" + std::to_string(a + 1);
    slot->session.SeatAgent(std::move(spec));
  }
  slots_.push_back(slot);
  return slot;
}

void Hub::OnMessage(ConnectionId connection, std::string_view frame,
                    TimePoint now) {
  SessionMessage message;
  try {
    message = ParseClientMessage(frame);
  } catch (const DixitError& e) {
    SendDirect(connection, e.code(), e.detail());
    return;
  }
  Binding binding;
  {
    std::lock_guard lock(mu_);
    auto it = bindings_.find(connection);
    if (it != bindings_.end()) binding = it->second;
  }
  if (binding.slot == nullptr) {
    if (message.type != MessageType::kJoinLobby) {
      SendDirect(connection, ErrorCode::kProtocolViolation,
                 "send JoinLobby first");
    } else if (message.payload.contains("token")) {
      Rejoin(connection, message);
    } else {
      Join(connection, message, now);
    }
    return;
  }
  std::lock_guard lock(binding.slot->mu);
  binding.slot->session.Handle(binding.participant, message, now);
  Flush(*binding.slot);
  Persist(*binding.slot);
}

void Hub::Join(ConnectionId connection, const SessionMessage& message,
               TimePoint now) {
  const std::string name = message.payload.value("name", std::string("player"));
  std::shared_ptr<Slot> slot;
  bool start = false;
  std::uint64_t seed = 0;
  {
    std::lock_guard lock(mu_);
    if (lobby_ == nullptr) lobby_ = NewLobby();
    slot = lobby_;
    std::lock_guard slot_lock(slot->mu);
    const std::string token = NewToken();
    const int participant = slot->session.Join(name, token);
    slot->connections[participant] = connection;
    bindings_[connection] = {slot, participant};
    tokens_[token] = {slot, participant};
    Flush(*slot);
    if (slot->session.full()) {
      lobby_.reset();
      start = true;
      seed = NewSeed();
    }
  }
  if (!start) return;
  std::lock_guard lock(slot->mu);
  slot->session.Start(seed, now);
  Flush(*slot);
  Persist(*slot);
}

void Hub::Rejoin(ConnectionId connection, const SessionMessage& message) {
  const auto& token = message.payload["token"];
  Binding binding;
  {
    std::lock_guard lock(mu_);
    auto it = token.is_string() ? tokens_.find(token.get<std::string>())
                                : tokens_.end();
    if (it == tokens_.end()) {
      SendDirect(connection, ErrorCode::kUnknownSession, "unknown token");
      return;
    }
    binding = it->second;
    bindings_[connection] = binding;
  }
  std::uint64_t after = 0;
  if (auto seq = message.payload.find("last_seq");
      seq != message.payload.end() && seq->is_number_unsigned()) {
    after = seq->get<std::uint64_t>();
  }
  std::lock_guard lock(binding.slot->mu);
  binding.slot->connections[binding.participant] = connection;
  for (const SessionMessage& m :
       binding.slot->session.History(binding.participant, after)) {
    sink_(connection, SerializeMessage(m));
  }
}

void Hub::Tick(TimePoint now) {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::lock_guard lock(mu_);
    slots = slots_;
  }
  for (const auto& slot : slots) {
    std::lock_guard lock(slot->mu);
    slot->session.HandleTimeouts(now);
    Flush(*slot);
    Persist(*slot);
  }
}

void Hub::Flush(Slot& slot) {
  for (Outbound& out : slot.session.TakeOutbox()) {
    auto it = slot.connections.find(out.participant);
    if (it != slot.connections.end()) {
      sink_(it->second, SerializeMessage(out.message));
    }
  }
}

void Hub::Persist(Slot& slot) {
  if (slot.persisted || !slot.session.finished() ||
      config_.transcript_dir.empty()) {
    return;
  }
  slot.persisted = true;
  std::filesystem::create_directories(config_.transcript_dir);
  const std::filesystem::path base = config_.transcript_dir / slot.session.id();
  WriteTranscriptFile(base.string() + ".jsonl", slot.session.transcript());
  std::ofstream log(base.string() + ".messages.jsonl", std::ios::binary);
  for (const nlohmann::json& event : slot.session.inbound_log()) {
    log << event.dump() << '\n';
  }
  if (!log) Fail(ErrorCode::kIoError, "cannot write session message log");
}

}  // namespace dixit::server
