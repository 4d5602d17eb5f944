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

#ifndef DIXIT_SIM_TOURNAMENT_H_
#define DIXIT_SIM_TOURNAMENT_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "dixit/agents/agent.h"
#include "dixit/agents/lexicon.h"
#include "dixit/engine/transcript.h"
#include "dixit/sim/report.h"

namespace dixit::sim {

// Tournament config file (JSON):
//   {"deck": "deck.jsonl", "lexicon": "lexicon.jsonl",
//    "game": {"n_players": 4, "phrase_limit": 4, "target_score": 30},
//    "games": 100, "seed": 1,
//    "agents": [{...agent spec...} | "path/to/agent.json", ...]}
// Relative paths resolve against the config file's directory. One agent per
// slot; the slot count must equal n_players.
struct TournamentConfig {
  int games = 1;
  std::uint64_t master_seed = 0;
  GameConfig game;  // rng_seed is derived per game
  std::vector<agents::AgentSpec> agents;
  std::filesystem::path deck_path;
  std::filesystem::path lexicon_path;

  void Validate() const;
};

TournamentConfig TournamentConfigFromJson(const nlohmann::json& record,
                                          const std::filesystem::path& base_dir);
TournamentConfig LoadTournamentConfig(const std::filesystem::path& path);

// Seating and seeds for one game. Slot i sits at seat
// (i + rotation) mod n, where the rotation advances by one per game from a
// seed-derived offset, so every slot opens as storyteller equally often.
struct GamePlan {
  int game_index = 0;
  GameConfig config;
  std::vector<int> seat_slot;  // slot occupying each seat
  std::vector<std::uint64_t> agent_nonces;  // per seat
};

GamePlan PlanGame(const TournamentConfig& config, int game_index);

// Plays one full game between the configured agents.
Transcript PlayGame(const TournamentConfig& config, const GamePlan& plan,
                    const std::vector<Card>& deck,
                    std::shared_ptr<const agents::CandidateLexicon> lexicon);

// Plays every game in memory.
std::vector<Transcript> PlayTournament(
    const TournamentConfig& config, const std::vector<Card>& deck,
    std::shared_ptr<const agents::CandidateLexicon> lexicon);

// Loads deck and lexicon, plays every game, and writes game_NNNN.jsonl
// transcripts plus report.json and report.txt into `out_dir`.
TournamentReport RunTournament(const TournamentConfig& config,
                               const std::filesystem::path& out_dir);

std::filesystem::path TranscriptFileName(int game_index);

}  // namespace dixit::sim

#endif  // DIXIT_SIM_TOURNAMENT_H_
