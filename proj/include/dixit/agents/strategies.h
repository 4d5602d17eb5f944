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

#ifndef DIXIT_AGENTS_STRATEGIES_H_
#define DIXIT_AGENTS_STRATEGIES_H_

#include <span>
#include <vector>

#include "dixit/agents/context.h"
#include "dixit/agents/decision.h"
#include "dixit/agents/estimator.h"
#include "dixit/agents/lexicon.h"

namespace dixit::agents {

// A storyteller within this many points of the target triggers block mode.
inline constexpr int kBlockMargin = 3;

enum class ObjectiveMode { kNormal, kBlock };

// The `limit` lexicon phrases that fit `card` best, highest score first, ties
// broken by the lexicographically smaller phrase.
// Throws kInvalidArgument for limit < 1.
std::vector<Phrase> GenerateCandidatePhrases(const Card& card,
                                             const CandidateLexicon& lexicon,
                                             const AssociationModel& model,
                                             int limit);

struct StoryCandidate {
  Card card;
  Phrase phrase;
  VoteEstimate estimate;
};

// Every (hand card, candidate phrase) pair with its vote estimate, in
// (card id, phrase) order.
std::vector<StoryCandidate> EvaluateStoryCandidates(
    const GameContext& ctx, const CandidateLexicon& lexicon);

// Storyteller Strategy 1: maximize P(0 < n_V < n-1). Ties go to the
// lexicographically least (card id, phrase).
AgentDecision StorytellerStrategy1(const GameContext& ctx,
                                   const CandidateLexicon& lexicon);

// Storyteller Strategy 2: among pairs whose P(n_V >= 1) exceeds
// settings.epsilon, minimize E[n_V]. Falls back to Strategy 1 when no pair
// qualifies.
AgentDecision StorytellerStrategy2(const GameContext& ctx,
                                   const CandidateLexicon& lexicon);

// The hand card expected to draw the most votes under `phrase`; ties to the
// lowest card id.
AgentDecision ChooseDecoy(const Phrase& phrase, const GameContext& ctx);

// Posterior that each table card is the storyteller's, with a uniform prior
// over the cards other than the voter's own and a softmax likelihood.
struct VoteBelief {
  std::vector<CardId> cards;
  std::vector<double> probability;  // own card has 0
};

// Throws kUnknownCard if `own_card` is not on the table, kOwnCardOnlyCard if
// it is the only card.
VoteBelief ComputeVoteBelief(std::span<const Card> table,
                             const CardId& own_card, const Phrase& phrase,
                             const GameContext& ctx);

// Normal mode votes for the belief argmax; block mode (see EndgameObjective)
// votes for the argmin. Ties go to the lowest card id.
AgentDecision ChooseVote(std::span<const Card> table, const CardId& own_card,
                         const Phrase& phrase, const GameContext& ctx);

// kBlock when the agent is voting and the storyteller is within kBlockMargin
// points of the target score.
ObjectiveMode EndgameObjective(const GameContext& ctx);

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_STRATEGIES_H_
