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

#ifndef DIXIT_SERVER_HUB_H_
#define DIXIT_SERVER_HUB_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "dixit/agents/lexicon.h"
#include "dixit/engine/card.h"
#include "dixit/server/server_config.h"
#include "dixit/server/session.h"

namespace dixit::server {

// Routes frames between connections and game sessions. Transport-agnostic:
// the websocket server and the tests drive it through the same calls.
//
// A JoinLobby without a token seats the connection in the open lobby, which
// starts once full. A JoinLobby carrying {"token", "last_seq"} rebinds a
// dropped player and replays every message after last_seq.
//
// Thread-safe. Each session has its own lock, so sessions progress in
// parallel while calls into one session are serialized.
class Hub {
 public:
  using ConnectionId = std::uint64_t;
  // Must not call back into the Hub.
  using Sink = std::function<void(ConnectionId, const std::string& frame)>;

  Hub(ServerConfig config, std::vector<Card> deck,
      std::shared_ptr<const agents::CandidateLexicon> lexicon, Sink sink);

  void OnConnect(ConnectionId connection);
  void OnMessage(ConnectionId connection, std::string_view frame,
                 TimePoint now);
  void OnDisconnect(ConnectionId connection);
  void Tick(TimePoint now);

  std::size_t num_sessions() const;
  std::size_t num_finished() const;

 private:
  struct Slot {
    std::mutex mu;
    GameSession session;
    std::map<int, ConnectionId> connections;  // by participant
    bool persisted = false;
  };
  struct Binding {
    std::shared_ptr<Slot> slot;
    int participant = -1;
  };

  void SendDirect(ConnectionId connection, ErrorCode code,
                  const std::string& message);
  void Join(ConnectionId connection, const SessionMessage& message,
            TimePoint now);
  void Rejoin(ConnectionId connection, const SessionMessage& message);
  std::shared_ptr<Slot> NewLobby();
  std::string NewToken();
  std::uint64_t NewSeed();
  // Callers hold slot.mu.
  void Flush(Slot& slot);
  void Persist(Slot& slot);

  ServerConfig config_;
  std::vector<Card> deck_;
  std::shared_ptr<const agents::CandidateLexicon> lexicon_;
  Sink sink_;

  mutable std::mutex mu_;  // taken before any Slot::mu, never after
  std::vector<std::shared_ptr<Slot>> slots_;
  std::shared_ptr<Slot> lobby_;
  std::map<ConnectionId, Binding> bindings_;
  std::map<std::string, Binding> tokens_;
  std::uint64_t next_session_ = 0;
};

}  // namespace dixit::server

#endif  // DIXIT_SERVER_HUB_H_
