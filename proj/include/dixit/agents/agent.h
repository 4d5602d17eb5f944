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

#ifndef DIXIT_AGENTS_AGENT_H_
#define DIXIT_AGENTS_AGENT_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dixit/agents/association.h"
#include "dixit/agents/context.h"
#include "dixit/agents/decision.h"
#include "dixit/agents/lexicon.h"
#include "dixit/engine/game.h"
#include "json.hpp"

namespace dixit::agents {

enum class StoryPolicy { kStrategy1, kStrategy2, kRandomPhrase };

std::string_view StoryPolicyName(StoryPolicy policy);
StoryPolicy StoryPolicyFromName(std::string_view name);

// Agent config file:
//   {"name": "...", "model": "tag_jaccard", "story_policy": "strategy1",
//    "temperature": 1.0, "epsilon": 0.05, "samples": 2000,
//    "candidate_limit": 8, "seed": 7, "context": {...}}
// `context` carries the lobby's language/culture/audience tags; the baseline
// models ignore it.
struct AgentSpec {
  std::string name = "agent";
  std::string model = "tag_jaccard";
  StoryPolicy story_policy = StoryPolicy::kStrategy1;
  StrategySettings settings;
  std::uint64_t seed = 0;
  nlohmann::json context = nlohmann::json::object();
};

nlohmann::json AgentSpecToJson(const AgentSpec& spec);
AgentSpec AgentSpecFromJson(const nlohmann::json& record);
AgentSpec LoadAgentSpec(const std::filesystem::path& path);

// What one seat legitimately knows about the game.
struct Observation {
  int seat = 0;
  int n_players = 4;
  int storyteller = 0;
  int round_index = 0;
  int target_score = 30;
  Phase phase = Phase::kAwaitStoryteller;
  std::vector<int> scores;
  std::vector<Card> hand;
  std::vector<CardId> discard;  // revealed in earlier rounds
  std::optional<Phrase> phrase;
  std::vector<CardId> table;  // revealed table, owners hidden
  std::optional<CardId> own_submission;
};

Observation ObserveForPlayer(const GameState& state, int seat);

// A Dixit-playing bot. `catalog` is the list of cards in play for this game
// (contents only, never their positions); `game_nonce` decorrelates the
// agent's sampling across games.
class Agent {
 public:
  Agent(AgentSpec spec, std::shared_ptr<const CandidateLexicon> lexicon,
        std::vector<Card> catalog, std::uint64_t game_nonce);

  // Dispatches on the observed phase. Throws kWrongPhase when the seat has
  // nothing to do.
  AgentDecision Act(const Observation& obs) const;

  AgentDecision TellStory(const Observation& obs) const;
  AgentDecision PickDecoy(const Observation& obs) const;
  AgentDecision CastVote(const Observation& obs) const;

  GameContext MakeContext(const Observation& obs, ActionKind kind) const;

  const AgentSpec& spec() const { return spec_; }

 private:
  const Card& Lookup(const CardId& id) const;

  AgentSpec spec_;
  std::shared_ptr<const CandidateLexicon> lexicon_;
  std::unique_ptr<AssociationModel> model_;
  std::vector<Card> catalog_;
  std::unordered_map<CardId, std::size_t> index_;
  std::uint64_t nonce_;
};

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_AGENT_H_
