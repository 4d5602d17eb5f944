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

#ifndef DIXIT_AGENTS_ESTIMATOR_H_
#define DIXIT_AGENTS_ESTIMATOR_H_

#include "dixit/agents/context.h"
#include "dixit/vote_model/vote_model.h"

namespace dixit::agents {

// Monte-Carlo estimate of the vote count a card would draw under a phrase.
// Each objective comes with the standard error of its sample mean.
struct VoteEstimate {
  vote_model::VoteCountDistribution distribution;
  double p_scoring = 0.0;
  double p_scoring_se = 0.0;
  double expected_votes = 0.0;
  double expected_votes_se = 0.0;
  double p_any_vote = 0.0;
  double p_any_vote_se = 0.0;
  int samples = 0;
  // The pool was too small to deal distinct opponent hands.
  bool with_replacement = false;
};

// How many of the n-1 other players would vote for `card` if it were on the
// table under `phrase`.
//
// Per sample: deal each of the n-1 opponents six cards from the unseen pool
// (without replacement when the pool holds 6(n-1) cards, otherwise with
// replacement); each opponent plays its highest-scoring card (ties to the
// lowest id); each opponent then votes by the softmax choice model over the
// simulated table, excluding its own card. The exact vote count distribution
// of every sample is averaged.
//
// Throws kEmptyUnseenPool, kInvalidArgument (no model), plus vote-model
// errors.
VoteEstimate EstimateVoteDistribution(const Card& card, const Phrase& phrase,
                                      const GameContext& ctx);

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_ESTIMATOR_H_
