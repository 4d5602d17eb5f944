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

#ifndef DIXIT_SERVER_SESSION_H_
#define DIXIT_SERVER_SESSION_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dixit/agents/agent.h"
#include "dixit/agents/lexicon.h"
#include "dixit/common/error.h"
#include "dixit/engine/game.h"
#include "dixit/engine/transcript.h"
#include "dixit/server/protocol.h"
#include "json.hpp"

namespace dixit::server {

using Clock = std::chrono::steady_clock;
using TimePoint = Clock::time_point;

struct SessionConfig {
  // n_players is the number of seats to fill; rng_seed is replaced by the
  // seed given to Start().
  GameConfig game;
  int max_agent_seats = 1;
  std::chrono::milliseconds move_timeout{120000};
  std::chrono::milliseconds agent_timeout{20000};
  // Language/culture/audience tags, handed to agents untouched.
  nlohmann::json context = nlohmann::json::object();
};

// A message addressed to one lobby participant (join order, not seat).
struct Outbound {
  int participant = 0;
  SessionMessage message;
};

// One game from lobby to GameOver. Not thread-safe: callers serialize all
// calls, which makes the inbound log a complete record of the session.
//
// Lobby methods throw DixitError. Handle() never throws for client mistakes;
// it answers with an Error message and leaves the game untouched.
class GameSession {
 public:
  GameSession(std::string id, SessionConfig config, std::vector<Card> deck,
              std::shared_ptr<const agents::CandidateLexicon> lexicon);

  // Returns the participant index. `token` is echoed in that participant's
  // own LobbyState messages so it can reconnect. Throws kSeatCountInvalid
  // when full and kProtocolViolation once started.
  int Join(const std::string& name, const std::string& token = "");
  // Throws kSeatCountInvalid past max_agent_seats or a full table.
  int SeatAgent(agents::AgentSpec spec);
  // Throws kSeatCountInvalid unless 4 to 6 seats are filled.
  void Start(std::uint64_t seed, TimePoint now);

  void Handle(int participant, const SessionMessage& message, TimePoint now);
  // Plays fallback moves for humans whose move deadline has passed.
  void HandleTimeouts(TimePoint now);
  // Expires the current deadline regardless of the clock.
  void ExpireDeadline(TimePoint now);

  std::vector<Outbound> TakeOutbox();
  // Messages already sent to `participant` with seq > after_seq.
  std::vector<SessionMessage> History(int participant,
                                      std::uint64_t after_seq) const;

  // Replay support: the agent move for (round, seat, kind) falls back as if
  // it had timed out.
  void ForceAgentTimeout(int round, int seat, ActionKind kind);

  const std::string& id() const { return id_; }
  bool started() const { return started_; }
  bool finished() const { return finished_; }
  bool full() const;
  int num_participants() const { return static_cast<int>(members_.size()); }
  bool IsAgent(int participant) const;
  int SeatOf(int participant) const;
  const GameState& state() const { return *state_; }
  std::optional<TimePoint> deadline() const { return deadline_; }
  const Transcript& transcript() const { return transcript_; }
  const std::vector<nlohmann::json>& inbound_log() const { return log_; }
  // RoundResult payloads in broadcast order.
  const std::vector<nlohmann::json>& round_results() const {
    return round_results_;
  }
  // Every stored agent explanation, in action order.
  const std::vector<nlohmann::json>& explanations() const {
    return explanations_;
  }

 private:
  struct Member {
    std::string name;
    std::string token;
    std::optional<agents::AgentSpec> agent;
    int seat = -1;
  };

  void Emit(int participant, MessageType type, nlohmann::json payload);
  void EmitError(int participant, const DixitError& error);
  void BroadcastLobby();
  void BroadcastState();
  void Apply(int seat, ActionKind kind, const CardId& card,
             const std::optional<Phrase>& phrase);
  void Settle(TimePoint now);
  void RunAgent(int seat);
  void FinishRound();
  void FinishGame();
  bool Pending(int seat) const;
  std::pair<CardId, std::optional<Phrase>> FallbackMove(int seat) const;

  std::string id_;
  SessionConfig config_;
  std::vector<Card> deck_;
  std::shared_ptr<const agents::CandidateLexicon> lexicon_;
  std::vector<Member> members_;
  std::vector<int> participant_at_;  // by seat
  std::vector<std::unique_ptr<agents::Agent>> agents_;  // by seat
  std::optional<GameState> state_;
  bool started_ = false;
  bool finished_ = false;
  std::optional<TimePoint> deadline_;
  std::pair<int, Phase> armed_for_{-1, Phase::kGameOver};
  std::vector<Outbound> outbox_;
  std::vector<std::vector<SessionMessage>> history_;
  std::vector<nlohmann::json> log_;
  std::vector<nlohmann::json> round_results_;
  std::vector<nlohmann::json> explanations_;
  std::set<std::tuple<int, int, ActionKind>> forced_timeouts_;
  Transcript transcript_;
};

// Feeds a session's inbound log to a fresh session. With the same deck and
// lexicon the result emits an identical message stream.
GameSession ReplaySessionLog(
    const std::string& id, const SessionConfig& config, std::vector<Card> deck,
    std::shared_ptr<const agents::CandidateLexicon> lexicon,
    const std::vector<nlohmann::json>& log);

// Public seat label; seats are anonymous during play.
std::string SeatLabel(int seat);

}  // namespace dixit::server

#endif  // DIXIT_SERVER_SESSION_H_
