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

#include "dixit/server/session.h"

#include <algorithm>
#include <utility>

#include "dixit/agents/decision.h"
#include "dixit/common/error.h"
#include "dixit/common/rng.h"
#include "dixit/server/player_view.h"

namespace dixit::server {

namespace {

constexpr std::uint64_t kSeatSalt = 0x73656174;  // "seat"
constexpr std::uint64_t kAgentSalt = 0x6167;     // "ag"

nlohmann::json ErrorPayload(ErrorCode code, const std::string& message) {
  return {{"code", ErrorCodeName(code)}, {"message", message}};
}

nlohmann::json FallbackExplanation(ActionKind kind, double elapsed_ms) {
  agents::Explanation e;
  e.strategy = "timeout_fallback";
  e.objective = "none";
  e.notes.push_back("agent exceeded its move timeout");
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "No %s decision finished in time (%.0f ms); played the "
                "deterministic fallback move.",
                std::string(ActionKindName(kind)).c_str(), elapsed_ms);
  e.summary = buf;
  return agents::ExplanationToJson(e);
}

}  // namespace

std::string SeatLabel(int seat) { return "Player " + std::to_string(seat + 1); }

GameSession::GameSession(
    std::string id, SessionConfig config, std::vector<Card> deck,
    std::shared_ptr<const agents::CandidateLexicon> lexicon)
    : id_(std::move(id)),
      config_(std::move(config)),
      deck_(std::move(deck)),
      lexicon_(std::move(lexicon)) {
  if (config_.game.n_players < kMinPlayers ||
      config_.game.n_players > kMaxPlayers) {
    Fail(ErrorCode::kSeatCountInvalid,
         "tables seat 4 to 6 players, not " +
             std::to_string(config_.game.n_players));
  }
  if (config_.max_agent_seats < 0) {
    Fail(ErrorCode::kInvalidConfig, "max_agent_seats must be >= 0");
  }
  if (lexicon_ == nullptr) Fail(ErrorCode::kEmptyLexicon, "no lexicon");
  if (lexicon_->phrase_limit() > config_.game.phrase_limit) {
    Fail(ErrorCode::kInvalidConfig,
         "lexicon allows longer phrases than the game");
  }
  ValidateDeck(deck_);
}

bool GameSession::full() const {
  return num_participants() >= config_.game.n_players;
}

bool GameSession::IsAgent(int participant) const {
  return members_.at(participant).agent.has_value();
}

int GameSession::SeatOf(int participant) const {
  return members_.at(participant).seat;
}

int GameSession::Join(const std::string& name, const std::string& token) {
  if (started_) Fail(ErrorCode::kProtocolViolation, "game already started");
  if (full()) Fail(ErrorCode::kSeatCountInvalid, "table is full");
  log_.push_back({{"event", "join"}, {"name", name}, {"token", token}});
  members_.push_back({name, token, std::nullopt, -1});
  history_.emplace_back();
  BroadcastLobby();
  return num_participants() - 1;
}

int GameSession::SeatAgent(agents::AgentSpec spec) {
  if (started_) Fail(ErrorCode::kProtocolViolation, "game already started");
  if (full()) Fail(ErrorCode::kSeatCountInvalid, "table is full");
  const int agents = static_cast<int>(std::count_if(
      members_.begin(), members_.end(),
      [](const Member& m) { return m.agent.has_value(); }));
  if (agents >= config_.max_agent_seats) {
    Fail(ErrorCode::kSeatCountInvalid,
         "at most " + std::to_string(config_.max_agent_seats) +
             " agent seats");
  }
  if (!config_.context.empty()) spec.context = config_.context;
  log_.push_back({{"event", "agent"}, {"spec", agents::AgentSpecToJson(spec)}});
  members_.push_back({spec.name, "", std::move(spec), -1});
  history_.emplace_back();
  BroadcastLobby();
  return num_participants() - 1;
}

void GameSession::Start(std::uint64_t seed, TimePoint now) {
  if (started_) Fail(ErrorCode::kProtocolViolation, "game already started");
  const int n = num_participants();
  if (n < kMinPlayers || n > kMaxPlayers) {
    Fail(ErrorCode::kSeatCountInvalid,
         "need 4 to 6 seated players, have " + std::to_string(n));
  }
  GameConfig game = config_.game;
  game.n_players = n;
  game.rng_seed = seed;
  GameState state = NewGame(deck_, game);  // validates before we commit
  log_.push_back({{"event", "start"}, {"seed", seed}});

  // Seats are dealt at random so join order says nothing about who is who.
  participant_at_.resize(n);
  for (int p = 0; p < n; ++p) participant_at_[p] = p;
  Rng(DeriveSeed(seed, {kSeatSalt})).Shuffle(participant_at_);

  transcript_.header.game_index = 0;
  transcript_.header.config = game;
  transcript_.header.deck = deck_;
  agents_.resize(n);
  for (int seat = 0; seat < n; ++seat) {
    Member& member = members_[participant_at_[seat]];
    member.seat = seat;
    if (member.agent) {
      agents_[seat] = std::make_unique<agents::Agent>(
          *member.agent, lexicon_, deck_,
          DeriveSeed(seed, {kAgentSalt, static_cast<std::uint64_t>(seat)}));
      transcript_.header.seats.push_back(
          {"agent", participant_at_[seat],
           agents::AgentSpecToJson(*member.agent)});
    } else {
      transcript_.header.seats.push_back(
          {"human", participant_at_[seat], nlohmann::json()});
    }
  }
  state_ = std::move(state);
  started_ = true;

  nlohmann::json labels = nlohmann::json::array();
  for (int seat = 0; seat < n; ++seat) labels.push_back(SeatLabel(seat));
  for (int p = 0; p < n; ++p) {
    Emit(p, MessageType::kGameStart,
         {{"session", id_},
          {"seat", members_[p].seat},
          {"n_players", n},
          {"labels", labels},
          {"phrase_limit", game.phrase_limit},
          {"target_score", game.target_score},
          {"context", config_.context}});
  }
  Settle(now);
}

void GameSession::Emit(int participant, MessageType type,
                       nlohmann::json payload) {
  if (members_[participant].agent) return;
  SessionMessage message;
  message.type = type;
  message.seq = history_[participant].size() + 1;
  message.payload = std::move(payload);
  history_[participant].push_back(message);
  outbox_.push_back({participant, std::move(message)});
}

void GameSession::EmitError(int participant, const DixitError& error) {
  Emit(participant, MessageType::kError,
       ErrorPayload(error.code(), error.detail()));
}

void GameSession::BroadcastLobby() {
  for (int p = 0; p < num_participants(); ++p) {
    nlohmann::json payload = {{"session", id_},
                              {"seats_filled", num_participants()},
                              {"seats_total", config_.game.n_players},
                              {"phrase_limit", config_.game.phrase_limit},
                              {"target_score", config_.game.target_score},
                              {"context", config_.context}};
    if (!members_[p].token.empty()) payload["token"] = members_[p].token;
    Emit(p, MessageType::kLobbyState, std::move(payload));
  }
}

void GameSession::BroadcastState() {
  for (int p = 0; p < num_participants(); ++p) {
    if (members_[p].agent) continue;
    Emit(p, MessageType::kStateUpdate,
         PlayerViewToJson(ProjectStateForPlayer(*state_, members_[p].seat)));
  }
}

std::vector<Outbound> GameSession::TakeOutbox() {
  return std::exchange(outbox_, {});
}

std::vector<SessionMessage> GameSession::History(
    int participant, std::uint64_t after_seq) const {
  const auto& all = history_.at(participant);
  if (after_seq >= all.size()) return {};
  return {all.begin() + static_cast<std::ptrdiff_t>(after_seq), all.end()};
}

void GameSession::ForceAgentTimeout(int round, int seat, ActionKind kind) {
  forced_timeouts_.insert({round, seat, kind});
}

bool GameSession::Pending(int seat) const {
  const GameState& s = *state_;
  switch (s.phase) {
    case Phase::kAwaitStoryteller:
      return seat == s.storyteller;
    case Phase::kAwaitDecoys:
      return seat != s.storyteller && !s.round.submissions[seat];
    case Phase::kAwaitVotes:
      return seat != s.storyteller && !s.round.votes[seat];
    default:
      return false;
  }
}

std::pair<CardId, std::optional<Phrase>> GameSession::FallbackMove(
    int seat) const {
  const GameState& s = *state_;
  if (s.phase == Phase::kAwaitVotes) {
    std::optional<CardId> best;
    for (const TableEntry& entry : s.round.table) {
      if (entry.owner == seat) continue;
      if (!best || entry.card < *best) best = entry.card;
    }
    return {*best, std::nullopt};
  }
  CardId lowest = s.hands[seat].front().id;
  for (const Card& card : s.hands[seat]) lowest = std::min(lowest, card.id);
  if (s.phase == Phase::kAwaitStoryteller) {
    return {lowest, lexicon_->LeastPhrase()};
  }
  return {lowest, std::nullopt};
}

void GameSession::Apply(int seat, ActionKind kind, const CardId& card,
                        const std::optional<Phrase>& phrase) {
  switch (kind) {
    case ActionKind::kStory:
      StorytellerSubmit(*state_, card, *phrase);
      break;
    case ActionKind::kDecoy:
      DecoySubmit(*state_, seat, card);
      break;
    case ActionKind::kVote:
      VoteSubmit(*state_, seat, card);
      break;
  }
}

void GameSession::Handle(int participant, const SessionMessage& message,
                         TimePoint now) {
  if (participant < 0 || participant >= num_participants() ||
      IsAgent(participant)) {
    Fail(ErrorCode::kUnknownPlayer,
         "no human participant " + std::to_string(participant));
  }
  log_.push_back({{"event", "message"},
                  {"participant", participant},
                  {"message", MessageToJson(message)}});
  try {
    if (!started_) {
      Fail(ErrorCode::kProtocolViolation, "game has not started");
    }
    if (finished_) Fail(ErrorCode::kProtocolViolation, "game is over");
    const int seat = members_[participant].seat;
    const GameState& s = *state_;
    const CardId card = message.payload.value("card", std::string());
    std::optional<Phrase> phrase;
    ActionKind kind;
    switch (message.type) {
      case MessageType::kSubmitPhrase:
        if (s.phase != Phase::kAwaitStoryteller || seat != s.storyteller) {
          Fail(ErrorCode::kProtocolViolation,
               "only the storyteller submits a phrase, before decoys");
        }
        kind = ActionKind::kStory;
        phrase = ParsePhrase(message.payload["phrase"].get<std::string>());
        break;
      case MessageType::kSubmitCard:
        if (s.phase != Phase::kAwaitDecoys) {
          Fail(ErrorCode::kProtocolViolation,
               "cards are submitted in the decoy phase");
        }
        kind = ActionKind::kDecoy;
        break;
      case MessageType::kSubmitVote:
        if (s.phase != Phase::kAwaitVotes) {
          Fail(ErrorCode::kProtocolViolation,
               "votes are cast in the vote phase");
        }
        kind = ActionKind::kVote;
        break;
      default:
        Fail(ErrorCode::kProtocolViolation,
             std::string(MessageTypeName(message.type)) +
                 " is not valid during a game");
    }
    const int round = s.round_index;
    Apply(seat, kind, card, phrase);
    ActionRecord action{kind, round, seat, card, phrase, std::nullopt};
    transcript_.entries.push_back(std::move(action));
  } catch (const DixitError& e) {
    EmitError(participant, e);
    return;
  }
  Settle(now);
}

void GameSession::HandleTimeouts(TimePoint now) {
  if (!started_ || finished_ || !deadline_ || now < *deadline_) return;
  ExpireDeadline(now);
}

void GameSession::ExpireDeadline(TimePoint now) {
  if (!started_ || finished_) return;
  log_.push_back({{"event", "timeout"}});
  const Phase phase = state_->phase;
  std::vector<int> late;
  for (int seat = 0; seat < state_->num_players(); ++seat) {
    if (!agents_[seat] && Pending(seat)) late.push_back(seat);
  }
  for (int seat : late) {
    if (state_->phase != phase || !Pending(seat)) continue;
    const ActionKind kind = phase == Phase::kAwaitStoryteller ? ActionKind::kStory
                            : phase == Phase::kAwaitDecoys    ? ActionKind::kDecoy
                                                              : ActionKind::kVote;
    auto [card, phrase] = FallbackMove(seat);
    const int round = state_->round_index;
    Apply(seat, kind, card, phrase);
    transcript_.entries.push_back(
        ActionRecord{kind, round, seat, card, phrase, std::nullopt});
    const int participant = participant_at_[seat];
    Emit(participant, MessageType::kError,
         ErrorPayload(ErrorCode::kTimeout,
                      "move timed out; played " + card +
                          (phrase ? " with \"" + phrase->Text() + "\"" : "")));
  }
  Settle(now);
}

void GameSession::RunAgent(int seat) {
  const agents::Agent& agent = *agents_[seat];
  const agents::Observation obs = agents::ObserveForPlayer(*state_, seat);
  const int round = state_->round_index;
  const ActionKind kind = obs.phase == Phase::kAwaitStoryteller
                              ? ActionKind::kStory
                          : obs.phase == Phase::kAwaitDecoys
                              ? ActionKind::kDecoy
                              : ActionKind::kVote;

  CardId card;
  std::optional<Phrase> phrase;
  nlohmann::json explanation;
  bool timed_out = forced_timeouts_.count({round, seat, kind}) > 0;
  double elapsed_ms = 0.0;
  if (!timed_out) {
    const auto begin = Clock::now();
    agents::AgentDecision decision = agent.Act(obs);
    elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - begin)
                     .count();
    if (elapsed_ms > static_cast<double>(config_.agent_timeout.count())) {
      timed_out = true;
    } else {
      card = decision.card;
      phrase = decision.phrase;
      explanation = agents::ExplanationToJson(decision.explanation);
    }
  }
  if (timed_out) {
    log_.push_back({{"event", "agent_timeout"},
                    {"round", round},
                    {"seat", seat},
                    {"kind", ActionKindName(kind)}});
    std::tie(card, phrase) = FallbackMove(seat);
    explanation = FallbackExplanation(kind, elapsed_ms);
  }
  Apply(seat, kind, card, phrase);
  transcript_.entries.push_back(
      ActionRecord{kind, round, seat, card, phrase, explanation});
  nlohmann::json stored = {{"round", round},
                           {"seat", seat},
                           {"label", SeatLabel(seat)},
                           {"kind", ActionKindName(kind)},
                           {"card", card},
                           {"explanation", explanation}};
  if (phrase) stored["phrase"] = phrase->Text();
  explanations_.push_back(std::move(stored));
}

void GameSession::FinishRound() {
  BroadcastState();
  nlohmann::json result = RoundRevealToJson(MakeRoundReveal(*state_));
  std::vector<int> after = state_->scores;
  for (std::size_t p = 0; p < after.size(); ++p) {
    after[p] += state_->round.score->points[p];
  }
  result["scores"] = after;
  for (int p = 0; p < num_participants(); ++p) {
    Emit(p, MessageType::kRoundResult, result);
  }
  round_results_.push_back(std::move(result));
  transcript_.entries.push_back(MakeRoundRecord(*state_));
  AdvanceRound(*state_);
}

void GameSession::FinishGame() {
  finished_ = true;
  deadline_.reset();
  transcript_.end = MakeEndRecord(*state_);
  for (int p = 0; p < num_participants(); ++p) {
    for (const nlohmann::json& e : explanations_) {
      Emit(p, MessageType::kExplanation, e);
    }
  }
  nlohmann::json seats = nlohmann::json::array();
  for (int seat = 0; seat < state_->num_players(); ++seat) {
    seats.push_back({{"seat", seat},
                     {"label", SeatLabel(seat)},
                     {"kind", agents_[seat] ? "agent" : "human"}});
  }
  for (int p = 0; p < num_participants(); ++p) {
    Emit(p, MessageType::kGameEnd,
         {{"rounds", state_->round_index},
          {"scores", state_->scores},
          {"winners", state_->winners},
          {"seats", seats}});
  }
}

void GameSession::Settle(TimePoint now) {
  const int n = state_->num_players();
  for (;;) {
    if (state_->phase == Phase::kRoundScored) {
      FinishRound();
      continue;
    }
    if (state_->phase == Phase::kGameOver) break;
    int next = -1;
    for (int k = 0; k < n && next < 0; ++k) {
      const int seat = (state_->storyteller + k) % n;
      if (agents_[seat] && Pending(seat)) next = seat;
    }
    if (next < 0) break;
    RunAgent(next);
  }
  BroadcastState();
  if (state_->phase == Phase::kGameOver) {
    FinishGame();
    return;
  }
  const std::pair<int, Phase> key{state_->round_index, state_->phase};
  if (key != armed_for_) {
    armed_for_ = key;
    deadline_ = now + config_.move_timeout;
  }
}

GameSession ReplaySessionLog(
    const std::string& id, const SessionConfig& config, std::vector<Card> deck,
    std::shared_ptr<const agents::CandidateLexicon> lexicon,
    const std::vector<nlohmann::json>& log) {
  GameSession session(id, config, std::move(deck), std::move(lexicon));
  for (const nlohmann::json& event : log) {
    if (event.value("event", "") == "agent_timeout") {
      session.ForceAgentTimeout(event.at("round").get<int>(),
                                event.at("seat").get<int>(),
                                ActionKindFromName(event.at("kind").get<std::string>()));
    }
  }
  const TimePoint now{};
  for (const nlohmann::json& event : log) {
    const std::string kind = event.at("event").get<std::string>();
    if (kind == "join") {
      session.Join(event.at("name").get<std::string>(),
                   event.value("token", std::string()));
    } else if (kind == "agent") {
      session.SeatAgent(agents::AgentSpecFromJson(event.at("spec")));
    } else if (kind == "start") {
      session.Start(event.at("seed").get<std::uint64_t>(), now);
    } else if (kind == "message") {
      session.Handle(event.at("participant").get<int>(),
                     ClientMessageFromJson(event.at("message")), now);
    } else if (kind == "timeout") {
      session.ExpireDeadline(now);
    } else if (kind != "agent_timeout") {
      Fail(ErrorCode::kCorruptTranscript, "unknown log event '" + kind + "'");
    }
  }
  return session;
}

}  // namespace dixit::server
