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

#ifndef DIXIT_SERVER_PLAYER_VIEW_H_
#define DIXIT_SERVER_PLAYER_VIEW_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dixit/engine/game.h"
#include "json.hpp"

namespace dixit::server {

// What a table card shows once revealed: its face, never its owner.
struct CardFace {
  CardId id;
  std::set<std::string> tags;
  std::optional<std::string> image_ref;
};

// Owners and votes of a scored round.
struct RoundReveal {
  int round = 0;
  int storyteller = 0;
  Phrase phrase;
  std::vector<TableEntry> table;
  std::vector<std::optional<CardId>> votes;
  std::vector<int> points;
  int storyteller_votes = 0;
};

// The information-restricted state sent to one player. There is no field
// that could carry another player's hand, and `reveal` is only set once the
// round is scored.
struct PlayerView {
  int seat = 0;
  int n_players = 0;
  int round = 0;
  Phase phase = Phase::kAwaitStoryteller;
  int storyteller = 0;
  int phrase_limit = 0;
  int target_score = 0;
  int deck_remaining = 0;
  std::vector<Card> hand;
  std::optional<Phrase> phrase;
  std::vector<CardFace> table;  // face up, owners hidden
  std::optional<CardId> own_submission;
  std::optional<CardId> own_vote;
  // Whether each seat has placed its card (decoy phase) or token (vote
  // phase); never what it placed.
  std::vector<bool> acted;
  std::vector<int> scores;
  std::optional<RoundReveal> reveal;
  std::vector<int> winners;
};

// Throws kUnknownPlayer.
PlayerView ProjectStateForPlayer(const GameState& state, int player);

nlohmann::json PlayerViewToJson(const PlayerView& view);
nlohmann::json RoundRevealToJson(const RoundReveal& reveal);
RoundReveal MakeRoundReveal(const GameState& state);

}  // namespace dixit::server

#endif  // DIXIT_SERVER_PLAYER_VIEW_H_
