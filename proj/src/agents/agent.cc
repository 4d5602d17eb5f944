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

#include "dixit/agents/agent.h"

#include <algorithm>
#include <set>

#include "dixit/agents/strategies.h"
#include "dixit/common/error.h"
#include "dixit/common/json_lines.h"
#include "dixit/common/rng.h"

namespace dixit::agents {

std::string_view StoryPolicyName(StoryPolicy policy) {
  switch (policy) {
    case StoryPolicy::kStrategy1: return "strategy1";
    case StoryPolicy::kStrategy2: return "strategy2";
    case StoryPolicy::kRandomPhrase: return "random_phrase";
  }
  return "?";
}

StoryPolicy StoryPolicyFromName(std::string_view name) {
  for (StoryPolicy policy : {StoryPolicy::kStrategy1, StoryPolicy::kStrategy2,
                             StoryPolicy::kRandomPhrase}) {
    if (StoryPolicyName(policy) == name) return policy;
  }
  Fail(ErrorCode::kInvalidArgument,
       "unknown story policy '" + std::string(name) + "'");
}

nlohmann::json AgentSpecToJson(const AgentSpec& spec) {
  nlohmann::json out = SettingsToJson(spec.settings);
  out["name"] = spec.name;
  out["model"] = spec.model;
  out["story_policy"] = StoryPolicyName(spec.story_policy);
  out["seed"] = spec.seed;
  out["context"] = spec.context;
  return out;
}

AgentSpec AgentSpecFromJson(const nlohmann::json& record) {
  if (!record.is_object()) {
    Fail(ErrorCode::kParseError, "agent spec must be a JSON object");
  }
  AgentSpec spec;
  spec.name = record.value("name", spec.name);
  spec.model = record.value("model", spec.model);
  spec.story_policy = StoryPolicyFromName(
      record.value("story_policy", std::string(StoryPolicyName(spec.story_policy))));
  spec.settings = SettingsFromJson(record);
  spec.seed = record.value("seed", spec.seed);
  if (record.contains("context")) spec.context = record["context"];
  if (!IsKnownAssociationModel(spec.model)) {
    Fail(ErrorCode::kInvalidArgument,
         "unknown association model '" + spec.model + "'");
  }
  return spec;
}

AgentSpec LoadAgentSpec(const std::filesystem::path& path) {
  try {
    return AgentSpecFromJson(ReadJsonFile(path));
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

Observation ObserveForPlayer(const GameState& state, int seat) {
  if (seat < 0 || seat >= state.num_players()) {
    Fail(ErrorCode::kUnknownPlayer, "no seat " + std::to_string(seat));
  }
  Observation obs;
  obs.seat = seat;
  obs.n_players = state.num_players();
  obs.storyteller = state.storyteller;
  obs.round_index = state.round_index;
  obs.target_score = state.config.target_score;
  obs.phase = state.phase;
  obs.scores = state.scores;
  obs.hand = state.hands[seat];
  for (const Card& card : state.discard) obs.discard.push_back(card.id);
  if (state.phase != Phase::kAwaitStoryteller) obs.phrase = state.round.phrase;
  for (const TableEntry& entry : state.round.table) obs.table.push_back(entry.card);
  obs.own_submission = state.round.submissions[seat];
  return obs;
}

Agent::Agent(AgentSpec spec, std::shared_ptr<const CandidateLexicon> lexicon,
             std::vector<Card> catalog, std::uint64_t game_nonce)
    : spec_(std::move(spec)),
      lexicon_(std::move(lexicon)),
      catalog_(std::move(catalog)),
      nonce_(game_nonce) {
  if (!lexicon_) Fail(ErrorCode::kEmptyLexicon, "agent needs a lexicon");
  spec_.settings.Validate();
  model_ = MakeAssociationModel(spec_.model, lexicon_, spec_.seed);
  for (std::size_t i = 0; i < catalog_.size(); ++i) index_[catalog_[i].id] = i;
}

const Card& Agent::Lookup(const CardId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    Fail(ErrorCode::kUnknownCard, "card '" + id + "' is not in the catalog");
  }
  return catalog_[it->second];
}

GameContext Agent::MakeContext(const Observation& obs, ActionKind kind) const {
  GameContext ctx;
  ctx.n_players = obs.n_players;
  ctx.self = obs.seat;
  ctx.storyteller = obs.storyteller;
  ctx.target_score = obs.target_score;
  ctx.scores = obs.scores;
  ctx.hand = obs.hand;
  std::sort(ctx.hand.begin(), ctx.hand.end(),
            [](const Card& a, const Card& b) { return a.id < b.id; });
  std::set<CardId> seen(obs.discard.begin(), obs.discard.end());
  seen.insert(obs.table.begin(), obs.table.end());
  for (const Card& card : obs.hand) seen.insert(card.id);
  if (obs.own_submission) seen.insert(*obs.own_submission);
  for (const Card& card : catalog_) {
    if (!seen.count(card.id)) ctx.unseen_pool.push_back(card);
  }
  ctx.model = model_.get();
  ctx.settings = spec_.settings;
  ctx.seed = DeriveSeed(spec_.seed,
                        {nonce_, static_cast<std::uint64_t>(obs.round_index),
                         static_cast<std::uint64_t>(obs.seat),
                         static_cast<std::uint64_t>(kind)});
  return ctx;
}

AgentDecision Agent::Act(const Observation& obs) const {
  switch (obs.phase) {
    case Phase::kAwaitStoryteller:
      if (obs.seat == obs.storyteller) return TellStory(obs);
      break;
    case Phase::kAwaitDecoys:
      if (obs.seat != obs.storyteller && !obs.own_submission) return PickDecoy(obs);
      break;
    case Phase::kAwaitVotes:
      if (obs.seat != obs.storyteller) return CastVote(obs);
      break;
    default:
      break;
  }
  Fail(ErrorCode::kWrongPhase, "seat " + std::to_string(obs.seat) +
                                   " has no move in phase " +
                                   std::string(PhaseName(obs.phase)));
}

AgentDecision Agent::TellStory(const Observation& obs) const {
  GameContext ctx = MakeContext(obs, ActionKind::kStory);
  switch (spec_.story_policy) {
    case StoryPolicy::kStrategy1:
      return StorytellerStrategy1(ctx, *lexicon_);
    case StoryPolicy::kStrategy2:
      return StorytellerStrategy2(ctx, *lexicon_);
    case StoryPolicy::kRandomPhrase:
      break;
  }
  if (ctx.hand.empty()) Fail(ErrorCode::kInvalidArgument, "empty hand");
  Rng rng(ctx.seed);
  AgentDecision decision;
  decision.kind = ActionKind::kStory;
  decision.card = ctx.hand[rng.UniformIndex(ctx.hand.size())].id;
  decision.phrase = lexicon_->phrases()[rng.UniformIndex(lexicon_->size())];
  Explanation& e = decision.explanation;
  e.strategy = "random_phrase";
  e.objective = "none";
  e.candidates_evaluated =
      static_cast<int>(ctx.hand.size() * lexicon_->size());
  e.summary = "Baseline policy: told '" + decision.phrase->Text() +
              "' for card " + decision.card +
              ", both drawn uniformly at random.";
  return decision;
}

AgentDecision Agent::PickDecoy(const Observation& obs) const {
  if (!obs.phrase) Fail(ErrorCode::kWrongPhase, "no phrase to answer yet");
  return ChooseDecoy(*obs.phrase, MakeContext(obs, ActionKind::kDecoy));
}

AgentDecision Agent::CastVote(const Observation& obs) const {
  if (!obs.phrase || !obs.own_submission || obs.table.empty()) {
    Fail(ErrorCode::kWrongPhase, "table is not revealed yet");
  }
  std::vector<Card> table;
  for (const CardId& id : obs.table) table.push_back(Lookup(id));
  return ChooseVote(table, *obs.own_submission, *obs.phrase,
                    MakeContext(obs, ActionKind::kVote));
}

}  // namespace dixit::agents
