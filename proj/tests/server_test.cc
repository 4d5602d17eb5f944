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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "dixit/common/error.h"
#include "dixit/engine/transcript.h"
#include "dixit/server/hub.h"
#include "dixit/server/player_view.h"
#include "dixit/server/protocol.h"
#include "dixit/server/server_config.h"
#include "dixit/server/session.h"
#include "dixit/sim/replay.h"
#include "session_driver.h"
#include "sim_util.h"
#include "test_util.h"

namespace dixit::server {
namespace {

using testing::SessionDriver;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const DixitError& e) {
    return e.code();
  }
  FAIL("expected a DixitError");
  return ErrorCode::kInvalidArgument;
}

SessionMessage Msg(MessageType type, nlohmann::json payload) {
  SessionMessage m;
  m.type = type;
  m.payload = std::move(payload);
  return m;
}

SessionConfig SmallConfig(int players = 4, int max_agents = 1) {
  SessionConfig config;
  config.game.n_players = players;
  config.max_agent_seats = max_agents;
  config.move_timeout = std::chrono::milliseconds(1000);
  config.context = {{"language", "en"}};
  return config;
}

// A started session: `humans` humans then `agents` fast agents.
GameSession Started(int humans, int agents, std::uint64_t seed = 3,
                    int deck_size = 40) {
  GameSession session("t", SmallConfig(humans + agents, agents),
                      testing::SyntheticDeck(deck_size),
                      testing::SyntheticLexicon());
  for (int h = 0; h < humans; ++h) session.Join("h" + std::to_string(h));
  for (int a = 0; a < agents; ++a) {
    session.SeatAgent(testing::FastSpec(agents::StoryPolicy::kStrategy1, 20));
  }
  session.Start(seed, TimePoint{});
  return session;
}

int ParticipantAtSeat(const GameSession& session, int seat) {
  for (int p = 0; p < session.num_participants(); ++p) {
    if (session.SeatOf(p) == seat) return p;
  }
  return -1;
}

std::vector<SessionMessage> OfType(const std::vector<Outbound>& out,
                                   MessageType type, int participant = -1) {
  std::vector<SessionMessage> found;
  for (const Outbound& o : out) {
    if (o.message.type == type && (participant < 0 || o.participant == participant)) {
      found.push_back(o.message);
    }
  }
  return found;
}

TEST_CASE("projection hides owners and other hands until the round is scored") {
  GameConfig config;
  config.rng_seed = 2;
  GameState state = NewGame(testing::SyntheticDeck(40), config);
  StorytellerSubmit(state, state.hands[0][0].id, ParsePhrase("moon"));
  for (int p = 1; p < 4; ++p) DecoySubmit(state, p, state.hands[p][0].id);

  PlayerView view = ProjectStateForPlayer(state, 2);
  CHECK(view.table.size() == 4);
  CHECK(view.hand.size() == 5);
  CHECK_FALSE(view.reveal.has_value());
  CHECK(view.own_submission == state.round.submissions[2]);
  CHECK(view.scores.size() == 4);
  const std::string json = PlayerViewToJson(view).dump();
  CHECK(json.find("owner") == std::string::npos);
  for (int p : {0, 1, 3}) {
    for (const Card& c : state.hands[p]) CHECK(json.find(c.id) == std::string::npos);
  }

  const CardId target = *state.round.submissions[0];
  VoteSubmit(state, 1, target);
  view = ProjectStateForPlayer(state, 3);
  CHECK(view.acted == std::vector<bool>{false, true, false, false});
  CHECK_FALSE(view.own_vote.has_value());
  CHECK(PlayerViewToJson(view).dump().find("\"votes\"") == std::string::npos);
  VoteSubmit(state, 2, target);
  VoteSubmit(state, 3, *state.round.submissions[1]);
  view = ProjectStateForPlayer(state, 3);
  REQUIRE(view.reveal.has_value());
  CHECK(view.reveal->votes[1] == target);
  CHECK(view.reveal->points == std::vector<int>{3, 4, 3, 0});
  CHECK(PlayerViewToJson(view)["reveal"]["table"][0].contains("owner"));

  CHECK(CodeOf([&] { ProjectStateForPlayer(state, 4); }) == ErrorCode::kUnknownPlayer);
  CHECK(CodeOf([&] { ProjectStateForPlayer(state, -1); }) == ErrorCode::kUnknownPlayer);
}

TEST_CASE("client frames are validated") {
  CHECK(CodeOf([] { ParseClientMessage("{nope"); }) == ErrorCode::kProtocolViolation);
  CHECK(CodeOf([] { ParseClientMessage("[]"); }) == ErrorCode::kProtocolViolation);
  CHECK(CodeOf([] { ParseClientMessage(R"({"type":"Chat","payload":{}})"); }) ==
        ErrorCode::kProtocolViolation);
  for (const char* server_only :
       {"LobbyState", "GameStart", "StateUpdate", "RoundResult", "Explanation",
        "GameEnd", "Error"}) {
    CHECK(CodeOf([&] {
            ParseClientMessage(std::string(R"({"type":")") + server_only +
                               R"(","payload":{}})");
          }) == ErrorCode::kProtocolViolation);
  }
  CHECK(CodeOf([] { ParseClientMessage(R"({"type":"SubmitVote","payload":{}})"); }) ==
        ErrorCode::kProtocolViolation);
  CHECK(CodeOf([] {
          ParseClientMessage(R"({"type":"SubmitPhrase","payload":{"card":"a"}})");
        }) == ErrorCode::kProtocolViolation);
  CHECK(CodeOf([] {
          ParseClientMessage(R"({"type":"SubmitCard","payload":{"card":"a"},"seq":-1})");
        }) == ErrorCode::kProtocolViolation);

  SessionMessage m =
      ParseClientMessage(R"({"type":"SubmitCard","seq":4,"payload":{"card":"k1"}})");
  CHECK(m.type == MessageType::kSubmitCard);
  CHECK(m.seq == 4);
  CHECK(m.payload["card"] == "k1");
  CHECK(ClientMessageFromJson(MessageToJson(m)).payload == m.payload);
  int client_types = 0;
  for (const char* name : {"JoinLobby", "LobbyState", "GameStart", "StateUpdate",
                           "SubmitPhrase", "SubmitCard", "SubmitVote", "RoundResult",
                           "Explanation", "GameEnd", "Error"}) {
    REQUIRE(MessageTypeFromName(name).has_value());
    CHECK(MessageTypeName(*MessageTypeFromName(name)) == name);
    client_types += IsClientMessage(*MessageTypeFromName(name));
  }
  CHECK(client_types == 4);
}

TEST_CASE("lobby seat rules") {
  SUBCASE("three seats cannot start") {
    GameSession s("t", SmallConfig(4, 1), testing::SyntheticDeck(40),
                  testing::SyntheticLexicon());
    for (int i = 0; i < 3; ++i) s.Join("p");
    CHECK(CodeOf([&] { s.Start(1, TimePoint{}); }) == ErrorCode::kSeatCountInvalid);
    CHECK_FALSE(s.started());
  }
  SUBCASE("one agent and three humans") {
    GameSession s = Started(3, 1);
    CHECK(s.started());
    CHECK(s.state().num_players() == 4);
  }
  SUBCASE("six humans and no agents") {
    GameSession s = Started(6, 0);
    CHECK(s.state().num_players() == 6);
  }
  SUBCASE("agent seats are capped") {
    GameSession s("t", SmallConfig(4, 1), testing::SyntheticDeck(40),
                  testing::SyntheticLexicon());
    s.SeatAgent(testing::FastSpec(agents::StoryPolicy::kStrategy1, 10));
    CHECK(CodeOf([&] {
            s.SeatAgent(testing::FastSpec(agents::StoryPolicy::kStrategy1, 10));
          }) == ErrorCode::kSeatCountInvalid);
  }
  SUBCASE("a full table turns players away") {
    GameSession s("t", SmallConfig(4, 0), testing::SyntheticDeck(40),
                  testing::SyntheticLexicon());
    for (int i = 0; i < 4; ++i) s.Join("p");
    CHECK(CodeOf([&] { s.Join("late"); }) == ErrorCode::kSeatCountInvalid);
  }
  SUBCASE("table sizes outside 4..6 are refused") {
    CHECK(CodeOf([] {
            GameSession("t", SmallConfig(3, 0), testing::SyntheticDeck(40),
                        testing::SyntheticLexicon());
          }) == ErrorCode::kSeatCountInvalid);
    CHECK(CodeOf([] {
            GameSession("t", SmallConfig(7, 0), testing::SyntheticDeck(60),
                        testing::SyntheticLexicon());
          }) == ErrorCode::kSeatCountInvalid);
  }
}

TEST_CASE("seating is shuffled and nobody is told who the agent is") {
  std::set<int> agent_seats;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GameSession s = Started(3, 1, seed);
    agent_seats.insert(s.SeatOf(3));
    for (const Outbound& o : s.TakeOutbox()) {
      if (o.message.type == MessageType::kGameStart ||
          o.message.type == MessageType::kLobbyState ||
          o.message.type == MessageType::kStateUpdate) {
        const std::string frame = SerializeMessage(o.message);
        CHECK(frame.find("agent") == std::string::npos);
        CHECK(frame.find("strategy") == std::string::npos);
        CHECK(frame.find("\"h1\"") == std::string::npos);  // names stay private
      }
    }
  }
  CHECK(agent_seats.size() > 1);
}

TEST_CASE("engine errors become Error messages and change nothing") {
  GameSession s = Started(4, 0, 5);
  s.TakeOutbox();
  const GameState& state = s.state();
  const int teller = ParticipantAtSeat(s, state.storyteller);
  const std::string card = state.hands[state.storyteller][0].id;

  SUBCASE("phrase over the limit") {
    const std::string before = testing::Fingerprint(state);
    s.Handle(teller, Msg(MessageType::kSubmitPhrase,
                         {{"card", card}, {"phrase", "a b c d e"}}),
             TimePoint{});
    auto errors = OfType(s.TakeOutbox(), MessageType::kError, teller);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].payload["code"] == "PhraseTooLong");
    CHECK(testing::Fingerprint(state) == before);
  }
  SUBCASE("phase and role violations") {
    const int other = ParticipantAtSeat(s, (state.storyteller + 1) % 4);
    s.Handle(other, Msg(MessageType::kSubmitPhrase, {{"card", card}, {"phrase", "x"}}),
             TimePoint{});
    s.Handle(other, Msg(MessageType::kSubmitVote, {{"card", card}}), TimePoint{});
    s.Handle(other, Msg(MessageType::kJoinLobby, {{"name", "x"}}), TimePoint{});
    auto errors = OfType(s.TakeOutbox(), MessageType::kError, other);
    REQUIRE(errors.size() == 3);
    for (const auto& e : errors) CHECK(e.payload["code"] == "ProtocolViolation");
  }
  SUBCASE("own-card vote") {
    s.Handle(teller, Msg(MessageType::kSubmitPhrase, {{"card", card}, {"phrase", "moon"}}),
             TimePoint{});
    for (int k = 1; k < 4; ++k) {
      const int seat = (state.storyteller + k) % 4;
      s.Handle(ParticipantAtSeat(s, seat),
               Msg(MessageType::kSubmitCard, {{"card", state.hands[seat][0].id}}),
               TimePoint{});
    }
    REQUIRE(state.phase == Phase::kAwaitVotes);
    s.TakeOutbox();
    const int voter_seat = (state.storyteller + 1) % 4;
    const int voter = ParticipantAtSeat(s, voter_seat);
    const std::string before = testing::Fingerprint(state);
    s.Handle(voter,
             Msg(MessageType::kSubmitVote, {{"card", *state.round.submissions[voter_seat]}}),
             TimePoint{});
    auto out = s.TakeOutbox();
    auto errors = OfType(out, MessageType::kError, voter);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].payload["code"] == "OwnCardVote");
    CHECK(OfType(out, MessageType::kStateUpdate).empty());
    CHECK(testing::Fingerprint(state) == before);
  }
}

TEST_CASE("the final vote broadcasts the round result") {
  GameSession s = Started(4, 0, 8);
  s.TakeOutbox();
  const GameState& state = s.state();
  const int teller_seat = state.storyteller;
  s.Handle(ParticipantAtSeat(s, teller_seat),
           Msg(MessageType::kSubmitPhrase,
               {{"card", state.hands[teller_seat][0].id}, {"phrase", "moon sea"}}),
           TimePoint{});
  for (int k = 1; k < 4; ++k) {
    const int seat = (teller_seat + k) % 4;
    s.Handle(ParticipantAtSeat(s, seat),
             Msg(MessageType::kSubmitCard, {{"card", state.hands[seat][0].id}}),
             TimePoint{});
  }
  const CardId target = *state.round.submissions[teller_seat];
  for (int k = 1; k < 4; ++k) {
    const int seat = (teller_seat + k) % 4;
    s.TakeOutbox();
    s.Handle(ParticipantAtSeat(s, seat), Msg(MessageType::kSubmitVote, {{"card", target}}),
             TimePoint{});
  }
  auto out = s.TakeOutbox();
  auto results = OfType(out, MessageType::kRoundResult);
  REQUIRE(results.size() == 4);
  const nlohmann::json& r = results[0].payload;
  CHECK(r["n_v"] == 3);
  CHECK(r["points"][teller_seat] == 0);
  CHECK(r["table"].size() == 4);
  CHECK(r["table"][0].contains("owner"));
  CHECK(r["votes"][teller_seat].is_null());
  CHECK(r["scores"][(teller_seat + 1) % 4] == 2);
  CHECK(state.phase == Phase::kAwaitStoryteller);
  CHECK(state.round_index == 1);
  CHECK(s.round_results().size() == 1);
}

TEST_CASE("timeouts play the deterministic fallback") {
  GameSession s = Started(4, 0, 11);
  s.TakeOutbox();
  const GameState& state = s.state();
  REQUIRE(s.deadline().has_value());
  s.HandleTimeouts(TimePoint{} + std::chrono::milliseconds(999));
  CHECK(state.phase == Phase::kAwaitStoryteller);

  const int teller_seat = state.storyteller;
  CardId lowest = state.hands[teller_seat][0].id;
  for (const Card& c : state.hands[teller_seat]) lowest = std::min(lowest, c.id);
  s.HandleTimeouts(TimePoint{} + std::chrono::milliseconds(1000));
  CHECK(state.phase == Phase::kAwaitDecoys);
  CHECK(state.round.submissions[teller_seat] == lowest);
  CHECK(state.round.phrase->Text() == testing::SyntheticLexicon()->LeastPhrase().Text());
  auto errors = OfType(s.TakeOutbox(), MessageType::kError,
                       ParticipantAtSeat(s, teller_seat));
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].payload["code"] == "Timeout");

  // The decoy phase got a fresh deadline; everyone left idle falls back.
  s.ExpireDeadline(TimePoint{});
  CHECK(state.phase == Phase::kAwaitVotes);
  s.ExpireDeadline(TimePoint{});
  CHECK(s.round_results().size() == 1);
  for (int seat = 0; seat < 4; ++seat) {
    if (seat == teller_seat) continue;
    CHECK(s.round_results()[0]["votes"][seat].is_string());
  }
}

TEST_CASE("a mixed session runs to the end with explanations held back") {
  GameSession s = Started(3, 1, 21, 84);
  SessionDriver driver(s, 4);
  bool ended = false;
  int explanations_before_end = 0;
  driver.set_observer([&](int, const SessionMessage& m, const std::string&) {
    if (m.type == MessageType::kGameEnd) ended = true;
    if (m.type == MessageType::kExplanation && !ended) {
      // Explanations arrive together right before GameEnd.
      CHECK(s.finished());
      ++explanations_before_end;
    }
  });
  driver.PlayToEnd(TimePoint{});
  REQUIRE(s.finished());
  CHECK(ended);

  int agent_actions = 0;
  for (const TranscriptEntry& entry : s.transcript().entries) {
    if (const auto* a = std::get_if<ActionRecord>(&entry)) {
      if (s.transcript().header.seats[a->player].kind == "agent") {
        ++agent_actions;
        REQUIRE(a->explanation.has_value());
        CHECK(agents::IsPopulatedExplanation(*a->explanation));
      } else {
        CHECK_FALSE(a->explanation.has_value());
      }
    }
  }
  CHECK(agent_actions > 0);
  CHECK(static_cast<int>(s.explanations().size()) == agent_actions);
  for (const auto& [participant, messages] : driver.received()) {
    int explanations = 0;
    for (const auto& m : messages) explanations += m.type == MessageType::kExplanation;
    CHECK(explanations == agent_actions);
    CHECK(messages.back().type == MessageType::kGameEnd);
  }
  // The session transcript is a simulator transcript.
  GameState replayed = sim::ReplayTranscript(s.transcript());
  CHECK(replayed.scores == s.state().scores);
}

TEST_CASE("property: sequence numbers are gapless per participant") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    GameSession s = Started(3, 1, seed, 40);
    SessionDriver driver(s, seed, 0.2);
    driver.PlayToEnd(TimePoint{});
    for (const auto& [participant, messages] : driver.received()) {
      for (std::size_t i = 0; i < messages.size(); ++i) {
        REQUIRE(messages[i].seq == i + 1);
      }
      CHECK(s.History(participant, 0).size() == messages.size());
      CHECK(s.History(participant, 5).front().seq == 6);
      CHECK(s.History(participant, messages.size()).empty());
    }
  }
}

TEST_CASE("property: no view leaks another hand or an early vote") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GameSession s = Started(3, 1, seed + 40, 40);
    SessionDriver driver(s, seed, 0.1);
    int frames = 0;
    driver.set_observer([&](int participant, const SessionMessage& m,
                            const std::string& frame) {
      ++frames;
      for (const std::string& v :
           testing::ScanFrame(s.state(), s.SeatOf(participant), m, frame)) {
        FAIL(v);
      }
    });
    driver.PlayToEnd(TimePoint{});
    CHECK(frames > 50);
  }
}

TEST_CASE("replaying the inbound log reproduces every message") {
  GameSession s = Started(3, 1, 77, 40);
  SessionDriver driver(s, 9, 0.25);
  // Let a couple of deadlines lapse too.
  for (int i = 0; i < 3; ++i) driver.Step(TimePoint{});
  s.ExpireDeadline(TimePoint{});
  driver.PlayToEnd(TimePoint{});
  s.ExpireDeadline(TimePoint{});  // ignored once finished
  REQUIRE(s.finished());

  GameSession again = ReplaySessionLog("t", SmallConfig(4, 1), testing::SyntheticDeck(40),
                                       testing::SyntheticLexicon(), s.inbound_log());
  REQUIRE(again.finished());
  CHECK(again.round_results() == s.round_results());
  for (int p = 0; p < s.num_participants(); ++p) {
    if (s.IsAgent(p)) continue;
    const auto a = s.History(p, 0);
    const auto b = again.History(p, 0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(SerializeMessage(a[i]) == SerializeMessage(b[i]));
    }
  }
  std::stringstream ta, tb;
  WriteTranscript(ta, s.transcript());
  WriteTranscript(tb, again.transcript());
  CHECK(ta.str() == tb.str());
}

TEST_CASE("an agent over its time budget falls back, and replay agrees") {
  SessionConfig config = SmallConfig(4, 1);
  config.agent_timeout = std::chrono::milliseconds(1);
  GameSession s("slow", config, testing::SyntheticDeck(40), testing::SyntheticLexicon());
  for (int h = 0; h < 3; ++h) s.Join("h");
  s.SeatAgent(testing::FastSpec(agents::StoryPolicy::kStrategy1, 20000));
  s.Start(1, TimePoint{});
  SessionDriver driver(s, 2);
  driver.PlayToEnd(TimePoint{});
  REQUIRE(s.finished());
  int fallbacks = 0;
  for (const auto& e : s.explanations()) {
    fallbacks += e["explanation"]["strategy"] == "timeout_fallback";
    CHECK(agents::IsPopulatedExplanation(e["explanation"]));
  }
  CHECK(fallbacks > 0);
  GameSession again = ReplaySessionLog("slow", config, testing::SyntheticDeck(40),
                                       testing::SyntheticLexicon(), s.inbound_log());
  CHECK(again.round_results() == s.round_results());
}

// In-memory transport for the hub.
struct Wire {
  std::map<Hub::ConnectionId, std::vector<nlohmann::json>> frames;
  Hub::Sink Sink() {
    return [this](Hub::ConnectionId id, const std::string& frame) {
      frames[id].push_back(nlohmann::json::parse(frame));
    };
  }
  std::optional<nlohmann::json> LastOf(Hub::ConnectionId id, const std::string& type) {
    for (auto it = frames[id].rbegin(); it != frames[id].rend(); ++it) {
      if ((*it)["type"] == type) return *it;
    }
    return std::nullopt;
  }
};

ServerConfig HubConfig(const std::filesystem::path& transcripts) {
  ServerConfig config;
  config.deck_path = testing::DataPath("deck84.jsonl");
  config.lexicon_path = testing::DataPath("lexicon.jsonl");
  config.transcript_dir = transcripts;
  config.session.game.n_players = 4;
  config.session.max_agent_seats = 1;
  config.agent_seats = 1;
  config.agent = testing::FastSpec(agents::StoryPolicy::kStrategy2, 20);
  config.seed = 5;
  return config;
}

std::string Frame(const std::string& type, nlohmann::json payload) {
  return nlohmann::json{{"type", type}, {"payload", payload}}.dump();
}

// Plays the human side of hub games from the frames each connection got.
void PlayThroughHub(Hub& hub, Wire& wire, const std::vector<Hub::ConnectionId>& ids) {
  for (int guard = 0; guard < 5000; ++guard) {
    bool moved = false;
    for (Hub::ConnectionId id : ids) {
      if (wire.LastOf(id, "GameEnd")) continue;
      auto update = wire.LastOf(id, "StateUpdate");
      if (!update) continue;
      const auto& v = (*update)["payload"];
      const int seat = v["seat"];
      const bool teller = v["storyteller"] == seat;
      const std::string phase = v["phase"];
      const std::string card = v["hand"].empty() ? "" : v["hand"][0]["id"];
      if (phase == "AwaitStoryteller" && teller) {
        hub.OnMessage(id, Frame("SubmitPhrase", {{"card", card}, {"phrase", "moon"}}),
                      Clock::now());
      } else if (phase == "AwaitDecoys" && !teller && v["own_submission"].is_null()) {
        hub.OnMessage(id, Frame("SubmitCard", {{"card", card}}), Clock::now());
      } else if (phase == "AwaitVotes" && !teller && v["own_vote"].is_null()) {
        for (const auto& face : v["table"]) {
          if (face["id"] != v["own_submission"]) {
            hub.OnMessage(id, Frame("SubmitVote", {{"card", face["id"]}}), Clock::now());
            break;
          }
        }
      } else {
        continue;
      }
      moved = true;
    }
    if (!moved) return;
  }
}

TEST_CASE("hub: lobby, play, reconnect and persistence") {
  const auto dir = testing::ScratchDir("hub");
  Wire wire;
  ServerConfig config = HubConfig(dir);
  Hub hub(config, LoadDeck(config.deck_path),
          std::make_shared<const agents::CandidateLexicon>(
              agents::LoadLexicon(config.lexicon_path, 4)),
          wire.Sink());

  hub.OnMessage(1, Frame("SubmitVote", {{"card", "c001"}}), Clock::now());
  CHECK(wire.frames[1].back()["payload"]["code"] == "ProtocolViolation");
  CHECK(wire.frames[1].back()["seq"] == 0);
  hub.OnMessage(1, "not json", Clock::now());
  CHECK(wire.frames[1].back()["payload"]["code"] == "ProtocolViolation");
  hub.OnMessage(1, Frame("JoinLobby", {{"token", "feedface"}}), Clock::now());
  CHECK(wire.frames[1].back()["payload"]["code"] == "UnknownSession");

  std::vector<Hub::ConnectionId> ids = {10, 11, 12};
  for (Hub::ConnectionId id : ids) {
    hub.OnConnect(id);
    hub.OnMessage(id, Frame("JoinLobby", {{"name", "p" + std::to_string(id)}}),
                  Clock::now());
  }
  CHECK(hub.num_sessions() == 1);
  for (Hub::ConnectionId id : ids) {
    REQUIRE(wire.LastOf(id, "GameStart"));
    CHECK(wire.LastOf(id, "LobbyState").value()["payload"].contains("token"));
  }

  // Player 11 drops after the start and comes back with its cursor.
  const std::string token =
      wire.LastOf(11, "LobbyState").value()["payload"]["token"];
  const std::uint64_t cursor = wire.frames[11].back()["seq"];
  hub.OnDisconnect(11);
  hub.OnMessage(10, Frame("JoinLobby", {{"name", "again"}}), Clock::now());
  CHECK(wire.frames[10].back()["payload"]["code"] == "ProtocolViolation");
  PlayThroughHub(hub, wire, {10, 12});  // stalls waiting for seat of 11 at some point
  const std::size_t missed_before = wire.frames[11].size();
  hub.OnMessage(21, Frame("JoinLobby", {{"token", token}, {"last_seq", cursor}}),
                Clock::now());
  CHECK(wire.frames[11].size() == missed_before);
  REQUIRE(!wire.frames[21].empty());
  CHECK(wire.frames[21].front()["seq"] == cursor + 1);
  for (std::size_t i = 1; i < wire.frames[21].size(); ++i) {
    CHECK(wire.frames[21][i]["seq"] == wire.frames[21][i - 1]["seq"].get<int>() + 1);
  }

  PlayThroughHub(hub, wire, {10, 12, 21});
  CHECK(hub.num_finished() == 1);
  REQUIRE(wire.LastOf(10, "GameEnd"));
  CHECK(std::filesystem::exists(dir / "session-0001.jsonl"));
  CHECK(std::filesystem::exists(dir / "session-0001.messages.jsonl"));
  GameState replayed = sim::Replay(dir / "session-0001.jsonl");
  CHECK(nlohmann::json(replayed.scores) ==
        wire.LastOf(10, "GameEnd").value()["payload"]["scores"]);

  // A fourth player opens a new lobby.
  hub.OnMessage(30, Frame("JoinLobby", {{"name", "next"}}), Clock::now());
  CHECK(hub.num_sessions() == 2);
}

TEST_CASE("hub ticks expire idle players") {
  Wire wire;
  ServerConfig config = HubConfig({});
  config.session.move_timeout = std::chrono::milliseconds(50);
  Hub hub(config, LoadDeck(config.deck_path),
          std::make_shared<const agents::CandidateLexicon>(
              agents::LoadLexicon(config.lexicon_path, 4)),
          wire.Sink());
  const TimePoint start = Clock::now();
  for (Hub::ConnectionId id : {1, 2, 3}) {
    hub.OnMessage(id, Frame("JoinLobby", {{"name", "x"}}), start);
  }
  int rounds_seen = 0;
  for (int tick = 1; tick < 400 && hub.num_finished() == 0; ++tick) {
    hub.Tick(start + std::chrono::milliseconds(60 * tick));
  }
  CHECK(hub.num_finished() == 1);
  for (const auto& f : wire.frames[1]) rounds_seen += f["type"] == "RoundResult";
  CHECK(rounds_seen > 0);
}

TEST_CASE("server config files") {
  ServerConfig config = LoadServerConfig(testing::DataPath("server.json"));
  CHECK(config.port == 8080);
  CHECK(config.agent_seats == 1);
  CHECK(config.session.max_agent_seats == 1);
  CHECK(config.session.context["language"] == "en");
  CHECK(config.agent.name == "strategy1");
  CHECK(config.deck_path == testing::DataPath("deck84.jsonl"));

  const auto dir = testing::ScratchDir("server_config");
  nlohmann::json record = nlohmann::json::parse(
      testing::Slurp(testing::DataPath("server.json")));
  record["agent"] = nlohmann::json::object();
  record["agent_seats"] = 2;
  std::ofstream(dir / "too_many_agents.json") << record.dump();
  CHECK(CodeOf([&] { LoadServerConfig(dir / "too_many_agents.json"); }) ==
        ErrorCode::kSeatCountInvalid);

  CHECK(ResolveServerConfigPath(std::filesystem::path("/x.json")) == "/x.json");
  setenv(kConfigPathEnv, "/from/env.json", 1);
  CHECK(ResolveServerConfigPath(std::nullopt) == "/from/env.json");
  unsetenv(kConfigPathEnv);
  CHECK(CodeOf([] { ResolveServerConfigPath(std::nullopt); }) ==
        ErrorCode::kInvalidConfig);
}

}  // namespace
}  // namespace dixit::server
