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

#include "dixit/sim/tournament.h"

#include <cstdio>
#include <fstream>

#include "dixit/common/error.h"
#include "dixit/common/json_lines.h"
#include "dixit/common/rng.h"

namespace dixit::sim {

namespace {

constexpr std::uint64_t kEngineSalt = 0x656e67;    // "eng"
constexpr std::uint64_t kRotationSalt = 0x726f74;  // "rot"
constexpr std::uint64_t kAgentSalt = 0x61676e;     // "agn"

void Record(Transcript& transcript, const agents::AgentDecision& decision,
            int round, int player) {
  ActionRecord action;
  action.kind = decision.kind;
  action.round = round;
  action.player = player;
  action.card = decision.card;
  action.phrase = decision.phrase;
  action.explanation = agents::ExplanationToJson(decision.explanation);
  transcript.entries.push_back(std::move(action));
}

}  // namespace

void TournamentConfig::Validate() const {
  game.Validate();
  if (games < 1) Fail(ErrorCode::kInvalidConfig, "games must be >= 1");
  if (static_cast<int>(agents.size()) != game.n_players) {
    Fail(ErrorCode::kInvalidConfig,
         std::to_string(agents.size()) + " agents for " +
             std::to_string(game.n_players) + " seats");
  }
}

TournamentConfig TournamentConfigFromJson(const nlohmann::json& record,
                                          const std::filesystem::path& base_dir) {
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  try {
    TournamentConfig config;
    config.deck_path = resolve(record.at("deck").get<std::string>());
    config.lexicon_path = resolve(record.at("lexicon").get<std::string>());
    if (record.contains("game")) config.game = GameConfigFromJson(record["game"]);
    config.games = record.value("games", config.games);
    config.master_seed = record.value("seed", config.master_seed);
    for (const auto& entry : record.at("agents")) {
      config.agents.push_back(
          entry.is_string()
              ? agents::LoadAgentSpec(resolve(entry.get<std::string>()))
              : agents::AgentSpecFromJson(entry));
    }
    return config;
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParseError, std::string("tournament config: ") + e.what());
  }
}

TournamentConfig LoadTournamentConfig(const std::filesystem::path& path) {
  try {
    return TournamentConfigFromJson(ReadJsonFile(path), path.parent_path());
  } catch (const DixitError& e) {
    if (e.detail().rfind(path.string(), 0) == 0) throw;
    throw DixitError(e.code(), path.string() + ": " + e.detail());
  }
}

GamePlan PlanGame(const TournamentConfig& config, int game_index) {
  const int n = config.game.n_players;
  const std::uint64_t g = static_cast<std::uint64_t>(game_index);
  GamePlan plan;
  plan.game_index = game_index;
  plan.config = config.game;
  plan.config.rng_seed = DeriveSeed(config.master_seed, {kEngineSalt, g});
  const int rotation = static_cast<int>(
      (DeriveSeed(config.master_seed, {kRotationSalt}) + g) % n);
  plan.seat_slot.resize(n);
  for (int slot = 0; slot < n; ++slot) plan.seat_slot[(slot + rotation) % n] = slot;
  for (int seat = 0; seat < n; ++seat) {
    plan.agent_nonces.push_back(DeriveSeed(
        config.master_seed, {kAgentSalt, g, static_cast<std::uint64_t>(seat)}));
  }
  return plan;
}

Transcript PlayGame(const TournamentConfig& config, const GamePlan& plan,
                    const std::vector<Card>& deck,
                    std::shared_ptr<const agents::CandidateLexicon> lexicon) {
  const int n = plan.config.n_players;
  Transcript transcript;
  transcript.header.game_index = plan.game_index;
  transcript.header.config = plan.config;
  transcript.header.deck = deck;

  std::vector<agents::Agent> seats;
  for (int seat = 0; seat < n; ++seat) {
    const agents::AgentSpec& spec = config.agents[plan.seat_slot[seat]];
    transcript.header.seats.push_back(
        {"agent", plan.seat_slot[seat], agents::AgentSpecToJson(spec)});
    seats.emplace_back(spec, lexicon, deck, plan.agent_nonces[seat]);
  }

  GameState state = NewGame(deck, plan.config);
  while (state.phase != Phase::kGameOver) {
    const int round = state.round_index;
    const int teller = state.storyteller;
    agents::AgentDecision story =
        seats[teller].TellStory(agents::ObserveForPlayer(state, teller));
    StorytellerSubmit(state, story.card, *story.phrase);
    Record(transcript, story, round, teller);

    // Decoys and votes are chosen from observations that never include
    // another player's pending choice.
    for (int k = 1; k < n; ++k) {
      const int p = (teller + k) % n;
      agents::AgentDecision decoy =
          seats[p].PickDecoy(agents::ObserveForPlayer(state, p));
      DecoySubmit(state, p, decoy.card);
      Record(transcript, decoy, round, p);
    }
    for (int k = 1; k < n; ++k) {
      const int p = (teller + k) % n;
      agents::AgentDecision vote =
          seats[p].CastVote(agents::ObserveForPlayer(state, p));
      VoteSubmit(state, p, vote.card);
      Record(transcript, vote, round, p);
    }
    transcript.entries.push_back(MakeRoundRecord(state));
    AdvanceRound(state);
  }
  transcript.end = MakeEndRecord(state);
  return transcript;
}

std::vector<Transcript> PlayTournament(
    const TournamentConfig& config, const std::vector<Card>& deck,
    std::shared_ptr<const agents::CandidateLexicon> lexicon) {
  config.Validate();
  std::vector<Transcript> transcripts;
  for (int g = 0; g < config.games; ++g) {
    transcripts.push_back(PlayGame(config, PlanGame(config, g), deck, lexicon));
  }
  return transcripts;
}

std::filesystem::path TranscriptFileName(int game_index) {
  char name[32];
  std::snprintf(name, sizeof(name), "game_%04d.jsonl", game_index);
  return name;
}

TournamentReport RunTournament(const TournamentConfig& config,
                               const std::filesystem::path& out_dir) {
  config.Validate();
  const std::vector<Card> deck = LoadDeck(config.deck_path);
  auto lexicon = std::make_shared<const agents::CandidateLexicon>(
      agents::LoadLexicon(config.lexicon_path, config.game.phrase_limit));

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) Fail(ErrorCode::kIoError, "cannot create " + out_dir.string());

  std::vector<Transcript> transcripts;
  for (int g = 0; g < config.games; ++g) {
    transcripts.push_back(PlayGame(config, PlanGame(config, g), deck, lexicon));
    WriteTranscriptFile(out_dir / TranscriptFileName(g), transcripts.back());
  }
  TournamentReport report = BuildReport(transcripts);

  std::ofstream json_out(out_dir / "report.json", std::ios::binary);
  json_out << ReportToJson(report).dump(2) << '\n';
  std::ofstream text_out(out_dir / "report.txt", std::ios::binary);
  text_out << FormatReportTable(report);
  if (!json_out || !text_out) Fail(ErrorCode::kIoError, "cannot write report");
  return report;
}

}  // namespace dixit::sim
