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

#ifndef DIXIT_ENGINE_GAME_H_
#define DIXIT_ENGINE_GAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dixit/engine/card.h"

namespace dixit {

inline constexpr int kHandSize = 6;
inline constexpr int kMinPlayers = 4;
inline constexpr int kMaxPlayers = 6;
inline constexpr int kStorytellerPoints = 3;
inline constexpr int kCorrectGuessPoints = 3;
inline constexpr int kAllOrNonePoints = 2;

struct GameConfig {
  int n_players = 4;
  int phrase_limit = 4;  // hard cap on phrase tokens
  int target_score = 30;
  std::uint64_t rng_seed = 0;

  // Throws kInvalidConfig.
  void Validate() const;

  bool operator==(const GameConfig&) const = default;
};

nlohmann::json GameConfigToJson(const GameConfig& config);
// Missing fields keep their defaults.
GameConfig GameConfigFromJson(const nlohmann::json& record);

enum class Phase {
  kAwaitStoryteller,
  kAwaitDecoys,
  kAwaitVotes,
  kRoundScored,
  kGameOver,
};

std::string_view PhaseName(Phase phase);
Phase PhaseFromName(std::string_view name);

struct TableEntry {
  CardId card;
  int owner = -1;

  bool operator==(const TableEntry&) const = default;
};

// Points earned in one round, indexed by player.
struct RoundScore {
  std::vector<int> points;
  int storyteller_votes = 0;  // n_V

  bool operator==(const RoundScore&) const = default;
};

struct RoundState {
  std::optional<Phrase> phrase;
  // Per player; the storyteller's entry is the target card.
  std::vector<std::optional<CardId>> submissions;
  // Revealed once every decoy is in. Order is a seeded permutation of the
  // seat-ordered submissions.
  std::vector<TableEntry> table;
  // Per player; the storyteller's entry stays empty.
  std::vector<std::optional<CardId>> votes;
  // The submitted cards themselves, in submission order.
  std::vector<Card> played;
  std::optional<RoundScore> score;

  bool operator==(const RoundState&) const = default;
};

struct GameState {
  GameConfig config;
  std::vector<Card> deck;  // undrawn, front is drawn first
  std::vector<std::vector<Card>> hands;
  std::vector<int> scores;
  std::vector<Card> discard;
  int storyteller = 0;
  int round_index = 0;  // rounds completed before the current one
  Phase phase = Phase::kAwaitStoryteller;
  RoundState round;
  // Filled at game over; more than one entry is a draw.
  std::vector<int> winners;
  std::size_t initial_deck_size = 0;

  int num_players() const { return config.n_players; }
  bool operator==(const GameState&) const = default;
};

// Shuffles `deck` with the config seed and deals six cards to each player.
// Throws kInvalidConfig, kDuplicateCardId, kDeckTooSmall.
GameState NewGame(std::vector<Card> deck, const GameConfig& config);

// All mutators validate completely before touching the state, so a thrown
// DixitError leaves `state` unchanged.
void StorytellerSubmit(GameState& state, const CardId& card,
                       const Phrase& phrase);
void DecoySubmit(GameState& state, int player, const CardId& card);
void VoteSubmit(GameState& state, int player, const CardId& card);

// Folds the round score into the scoreboard, discards the table, refills
// hands and rotates the storyteller, or ends the game.
void AdvanceRound(GameState& state);

// `submissions[p]` is the card player p put on the table (the storyteller's
// is the target); `votes[p]` is p's vote, empty for the storyteller.
//
// If nobody or everybody finds the target, the storyteller scores 0 and every
// other player 2. Otherwise the storyteller and each correct voter score 3.
// Every non-storyteller then gains 1 per vote on their own card.
RoundScore ScoreRound(std::span<const CardId> submissions,
                      std::span<const std::optional<CardId>> votes,
                      int storyteller);

// Permutation applied to seat-ordered submissions when the table is revealed:
// table[i] = submissions[order[i]]. Depends only on (seed, round, n).
std::vector<int> RevealOrder(std::uint64_t seed, int round_index, int n);

// Indices of the highest score.
std::vector<int> Leaders(std::span<const int> scores);

// Total cards held anywhere in the state.
std::size_t CountCards(const GameState& state);

const Card* FindCard(std::span<const Card> cards, const CardId& id);

// Owner of a table card, or -1.
int TableOwner(const RoundState& round, const CardId& card);

}  // namespace dixit

#endif  // DIXIT_ENGINE_GAME_H_
