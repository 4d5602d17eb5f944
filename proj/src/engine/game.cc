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

#include "dixit/engine/game.h"

#include <algorithm>
#include <string>

#include "dixit/common/error.h"
#include "dixit/common/rng.h"

namespace dixit {

namespace {

constexpr std::uint64_t kDeckSalt = 0x6465636b;   // "deck"
constexpr std::uint64_t kTableSalt = 0x7461626c;  // "tabl"

void RequirePhase(const GameState& state, Phase expected) {
  if (state.phase != expected) {
    Fail(ErrorCode::kWrongPhase,
         "expected phase " + std::string(PhaseName(expected)) + ", game is in " +
             std::string(PhaseName(state.phase)));
  }
}

void RequirePlayer(const GameState& state, int player) {
  if (player < 0 || player >= state.num_players()) {
    Fail(ErrorCode::kUnknownPlayer, "no player " + std::to_string(player));
  }
}

std::vector<Card>::const_iterator FindInHand(const std::vector<Card>& hand,
                                             const CardId& card) {
  return std::find_if(hand.begin(), hand.end(),
                      [&](const Card& c) { return c.id == card; });
}

void RevealTable(GameState& state) {
  const int n = state.num_players();
  std::vector<int> order = RevealOrder(state.config.rng_seed,
                                       state.round_index, n);
  state.round.table.clear();
  for (int seat : order) {
    state.round.table.push_back({*state.round.submissions[seat], seat});
  }
}

}  // namespace

void GameConfig::Validate() const {
  if (n_players < kMinPlayers || n_players > kMaxPlayers) {
    Fail(ErrorCode::kInvalidConfig,
         "n_players must be in [4,6], got " + std::to_string(n_players));
  }
  if (phrase_limit < 1) {
    Fail(ErrorCode::kInvalidConfig, "phrase_limit must be positive");
  }
  if (target_score < 1) {
    Fail(ErrorCode::kInvalidConfig, "target_score must be positive");
  }
}

nlohmann::json GameConfigToJson(const GameConfig& config) {
  return {{"n_players", config.n_players},
          {"phrase_limit", config.phrase_limit},
          {"target_score", config.target_score},
          {"rng_seed", config.rng_seed}};
}

GameConfig GameConfigFromJson(const nlohmann::json& record) {
  GameConfig config;
  config.n_players = record.value("n_players", config.n_players);
  config.phrase_limit = record.value("phrase_limit", config.phrase_limit);
  config.target_score = record.value("target_score", config.target_score);
  config.rng_seed = record.value("rng_seed", config.rng_seed);
  return config;
}

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kAwaitStoryteller: return "AwaitStoryteller";
    case Phase::kAwaitDecoys: return "AwaitDecoys";
    case Phase::kAwaitVotes: return "AwaitVotes";
    case Phase::kRoundScored: return "RoundScored";
    case Phase::kGameOver: return "GameOver";
  }
  return "?";
}

Phase PhaseFromName(std::string_view name) {
  for (Phase phase : {Phase::kAwaitStoryteller, Phase::kAwaitDecoys,
                      Phase::kAwaitVotes, Phase::kRoundScored,
                      Phase::kGameOver}) {
    if (PhaseName(phase) == name) return phase;
  }
  Fail(ErrorCode::kParseError, "unknown phase '" + std::string(name) + "'");
}

GameState NewGame(std::vector<Card> deck, const GameConfig& config) {
  config.Validate();
  ValidateDeck(deck);
  const std::size_t needed =
      static_cast<std::size_t>(kHandSize) * config.n_players;
  if (deck.size() < needed) {
    Fail(ErrorCode::kDeckTooSmall, "deck has " + std::to_string(deck.size()) +
                                       " cards, need at least " +
                                       std::to_string(needed));
  }

  GameState state;
  state.config = config;
  state.initial_deck_size = deck.size();
  Rng rng(DeriveSeed(config.rng_seed, {kDeckSalt}));
  rng.Shuffle(deck);

  state.hands.resize(config.n_players);
  auto next = deck.begin();
  for (auto& hand : state.hands) {
    hand.assign(std::make_move_iterator(next),
                std::make_move_iterator(next + kHandSize));
    next += kHandSize;
  }
  state.deck.assign(std::make_move_iterator(next),
                    std::make_move_iterator(deck.end()));
  state.scores.assign(config.n_players, 0);
  state.storyteller = 0;
  state.phase = Phase::kAwaitStoryteller;
  state.round.submissions.assign(config.n_players, std::nullopt);
  state.round.votes.assign(config.n_players, std::nullopt);
  return state;
}

void StorytellerSubmit(GameState& state, const CardId& card,
                       const Phrase& phrase) {
  RequirePhase(state, Phase::kAwaitStoryteller);
  if (phrase.empty()) Fail(ErrorCode::kInvalidPhrase, "empty phrase");
  if (static_cast<int>(phrase.size()) > state.config.phrase_limit) {
    Fail(ErrorCode::kPhraseTooLong,
         "phrase has " + std::to_string(phrase.size()) + " tokens, limit is " +
             std::to_string(state.config.phrase_limit));
  }
  auto& hand = state.hands[state.storyteller];
  auto it = FindInHand(hand, card);
  if (it == hand.end()) {
    Fail(ErrorCode::kCardNotInHand,
         "card '" + card + "' is not in the storyteller's hand");
  }

  state.round.phrase = phrase;
  state.round.submissions[state.storyteller] = card;
  state.round.played.push_back(*it);
  hand.erase(it);
  state.phase = Phase::kAwaitDecoys;
}

void DecoySubmit(GameState& state, int player, const CardId& card) {
  RequirePhase(state, Phase::kAwaitDecoys);
  RequirePlayer(state, player);
  if (player == state.storyteller) {
    Fail(ErrorCode::kStorytellerCannotAct,
         "the storyteller does not play a decoy");
  }
  if (state.round.submissions[player]) {
    Fail(ErrorCode::kAlreadySubmitted,
         "player " + std::to_string(player) + " already played a card");
  }
  auto& hand = state.hands[player];
  auto it = FindInHand(hand, card);
  if (it == hand.end()) {
    Fail(ErrorCode::kCardNotInHand, "card '" + card + "' is not in player " +
                                        std::to_string(player) + "'s hand");
  }

  state.round.submissions[player] = card;
  state.round.played.push_back(*it);
  hand.erase(it);
  const bool all_in = std::all_of(state.round.submissions.begin(),
                                  state.round.submissions.end(),
                                  [](const auto& s) { return s.has_value(); });
  if (all_in) {
    RevealTable(state);
    state.phase = Phase::kAwaitVotes;
  }
}

void VoteSubmit(GameState& state, int player, const CardId& card) {
  RequirePhase(state, Phase::kAwaitVotes);
  RequirePlayer(state, player);
  if (player == state.storyteller) {
    Fail(ErrorCode::kStorytellerCannotAct, "the storyteller does not vote");
  }
  if (state.round.votes[player]) {
    Fail(ErrorCode::kAlreadySubmitted,
         "player " + std::to_string(player) + " already voted");
  }
  if (TableOwner(state.round, card) < 0) {
    Fail(ErrorCode::kUnknownCard, "card '" + card + "' is not on the table");
  }
  if (state.round.submissions[player] == card) {
    Fail(ErrorCode::kOwnCardVote, "players cannot vote for their own card");
  }

  state.round.votes[player] = card;
  int cast = 0;
  for (const auto& vote : state.round.votes) cast += vote.has_value();
  if (cast == state.num_players() - 1) {
    std::vector<CardId> submissions;
    for (const auto& s : state.round.submissions) submissions.push_back(*s);
    state.round.score =
        ScoreRound(submissions, state.round.votes, state.storyteller);
    state.phase = Phase::kRoundScored;
  }
}

RoundScore ScoreRound(std::span<const CardId> submissions,
                      std::span<const std::optional<CardId>> votes,
                      int storyteller) {
  const int n = static_cast<int>(submissions.size());
  if (static_cast<int>(votes.size()) != n || storyteller < 0 ||
      storyteller >= n) {
    Fail(ErrorCode::kInvalidArgument, "inconsistent round sizes");
  }
  auto owner_of = [&](const CardId& card) {
    for (int p = 0; p < n; ++p) {
      if (submissions[p] == card) return p;
    }
    Fail(ErrorCode::kUnknownCard, "vote for card '" + card + "' not on table");
  };

  const CardId& target = submissions[storyteller];
  RoundScore score;
  score.points.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    if (p == storyteller) continue;
    if (!votes[p]) Fail(ErrorCode::kInvalidArgument, "missing vote");
    if (*votes[p] == target) ++score.storyteller_votes;
  }

  const bool all_or_none = score.storyteller_votes == 0 ||
                           score.storyteller_votes == n - 1;
  for (int p = 0; p < n; ++p) {
    if (p == storyteller) continue;
    if (all_or_none) {
      score.points[p] = kAllOrNonePoints;
    } else if (*votes[p] == target) {
      score.points[p] = kCorrectGuessPoints;
    }
  }
  if (!all_or_none) score.points[storyteller] = kStorytellerPoints;

  for (int p = 0; p < n; ++p) {
    if (p == storyteller) continue;
    const int owner = owner_of(*votes[p]);
    if (owner == p) {
      Fail(ErrorCode::kOwnCardVote, "player voted for their own card");
    }
    if (owner != storyteller) ++score.points[owner];
  }
  return score;
}

void AdvanceRound(GameState& state) {
  RequirePhase(state, Phase::kRoundScored);
  const int n = state.num_players();
  for (int p = 0; p < n; ++p) state.scores[p] += state.round.score->points[p];
  for (Card& card : state.round.played) state.discard.push_back(std::move(card));
  state.round = RoundState{};
  state.round.submissions.assign(n, std::nullopt);
  state.round.votes.assign(n, std::nullopt);
  ++state.round_index;

  const bool target_reached =
      std::any_of(state.scores.begin(), state.scores.end(),
                  [&](int s) { return s >= state.config.target_score; });
  if (!target_reached) {
    // Refill clockwise from the storyteller's left.
    for (int k = 1; k <= n; ++k) {
      auto& hand = state.hands[(state.storyteller + k) % n];
      while (static_cast<int>(hand.size()) < kHandSize && !state.deck.empty()) {
        hand.push_back(std::move(state.deck.front()));
        state.deck.erase(state.deck.begin());
      }
    }
  }
  // The game ends on reaching the target or once the last card is drawn.
  if (target_reached || state.deck.empty()) {
    state.phase = Phase::kGameOver;
    state.winners = Leaders(state.scores);
    return;
  }
  state.storyteller = (state.storyteller + 1) % n;
  state.phase = Phase::kAwaitStoryteller;
}

std::vector<int> RevealOrder(std::uint64_t seed, int round_index, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  Rng rng(DeriveSeed(seed, {kTableSalt, static_cast<std::uint64_t>(round_index)}));
  rng.Shuffle(order);
  return order;
}

std::vector<int> Leaders(std::span<const int> scores) {
  std::vector<int> leaders;
  if (scores.empty()) return leaders;
  const int best = *std::max_element(scores.begin(), scores.end());
  for (int p = 0; p < static_cast<int>(scores.size()); ++p) {
    if (scores[p] == best) leaders.push_back(p);
  }
  return leaders;
}

std::size_t CountCards(const GameState& state) {
  std::size_t total = state.deck.size() + state.discard.size() +
                      state.round.played.size();
  for (const auto& hand : state.hands) total += hand.size();
  return total;
}

const Card* FindCard(std::span<const Card> cards, const CardId& id) {
  for (const Card& card : cards) {
    if (card.id == id) return &card;
  }
  return nullptr;
}

int TableOwner(const RoundState& round, const CardId& card) {
  for (const TableEntry& entry : round.table) {
    if (entry.card == card) return entry.owner;
  }
  return -1;
}

}  // namespace dixit
