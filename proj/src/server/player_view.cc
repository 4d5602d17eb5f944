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

#include "dixit/server/player_view.h"

#include "dixit/common/error.h"

namespace dixit::server {

namespace {

nlohmann::json OptionalJson(const std::optional<std::string>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

}  // namespace

RoundReveal MakeRoundReveal(const GameState& state) {
  if (state.phase != Phase::kRoundScored) {
    Fail(ErrorCode::kWrongPhase, "round is not scored yet");
  }
  RoundReveal reveal;
  reveal.round = state.round_index;
  reveal.storyteller = state.storyteller;
  reveal.phrase = *state.round.phrase;
  reveal.table = state.round.table;
  reveal.votes = state.round.votes;
  reveal.points = state.round.score->points;
  reveal.storyteller_votes = state.round.score->storyteller_votes;
  return reveal;
}

PlayerView ProjectStateForPlayer(const GameState& state, int player) {
  if (player < 0 || player >= state.num_players()) {
    Fail(ErrorCode::kUnknownPlayer, "no player " + std::to_string(player));
  }
  PlayerView view;
  view.seat = player;
  view.n_players = state.num_players();
  view.round = state.round_index;
  view.phase = state.phase;
  view.storyteller = state.storyteller;
  view.phrase_limit = state.config.phrase_limit;
  view.target_score = state.config.target_score;
  view.deck_remaining = static_cast<int>(state.deck.size());
  view.hand = state.hands[player];
  view.scores = state.scores;
  view.winners = state.winners;
  if (state.phase == Phase::kGameOver) return view;

  view.phrase = state.round.phrase;
  view.own_submission = state.round.submissions[player];
  view.own_vote = state.round.votes[player];
  for (const TableEntry& entry : state.round.table) {
    const Card* card = FindCard(state.round.played, entry.card);
    view.table.push_back({entry.card, card->tags, card->image_ref});
  }
  view.acted.assign(view.n_players, false);
  for (int p = 0; p < view.n_players; ++p) {
    switch (state.phase) {
      case Phase::kAwaitDecoys:
        view.acted[p] = state.round.submissions[p].has_value();
        break;
      case Phase::kAwaitVotes:
      case Phase::kRoundScored:
        view.acted[p] = state.round.votes[p].has_value();
        break;
      default:
        break;
    }
  }
  if (state.phase == Phase::kRoundScored) view.reveal = MakeRoundReveal(state);
  return view;
}

nlohmann::json RoundRevealToJson(const RoundReveal& reveal) {
  nlohmann::json table = nlohmann::json::array();
  for (const TableEntry& t : reveal.table) {
    table.push_back({{"card", t.card}, {"owner", t.owner}});
  }
  nlohmann::json votes = nlohmann::json::array();
  for (const auto& vote : reveal.votes) votes.push_back(OptionalJson(vote));
  return {{"round", reveal.round},
          {"storyteller", reveal.storyteller},
          {"phrase", reveal.phrase.Text()},
          {"table", std::move(table)},
          {"votes", std::move(votes)},
          {"points", reveal.points},
          {"n_v", reveal.storyteller_votes}};
}

nlohmann::json PlayerViewToJson(const PlayerView& view) {
  nlohmann::json hand = nlohmann::json::array();
  for (const Card& card : view.hand) hand.push_back(CardToJson(card));
  nlohmann::json table = nlohmann::json::array();
  for (const CardFace& face : view.table) {
    nlohmann::json f = {{"id", face.id}, {"tags", face.tags}};
    if (face.image_ref) f["image_ref"] = *face.image_ref;
    table.push_back(std::move(f));
  }
  nlohmann::json out = {
      {"seat", view.seat},
      {"n_players", view.n_players},
      {"round", view.round},
      {"phase", PhaseName(view.phase)},
      {"storyteller", view.storyteller},
      {"phrase_limit", view.phrase_limit},
      {"target_score", view.target_score},
      {"deck_remaining", view.deck_remaining},
      {"hand", std::move(hand)},
      {"phrase", view.phrase ? nlohmann::json(view.phrase->Text())
                             : nlohmann::json(nullptr)},
      {"table", std::move(table)},
      {"own_submission", OptionalJson(view.own_submission)},
      {"own_vote", OptionalJson(view.own_vote)},
      {"acted", view.acted},
      {"scores", view.scores},
      {"winners", view.winners}};
  if (view.reveal) out["reveal"] = RoundRevealToJson(*view.reveal);
  return out;
}

}  // namespace dixit::server
