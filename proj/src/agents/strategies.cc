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

#include "dixit/agents/strategies.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>

#include "dixit/common/error.h"

namespace dixit::agents {

namespace {

constexpr std::size_t kRejectedShown = 3;

std::string Fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

bool StoryKeyLess(const StoryCandidate& a, const StoryCandidate& b) {
  if (a.card.id != b.card.id) return a.card.id < b.card.id;
  return a.phrase < b.phrase;
}

void AddSamplingNotes(const VoteEstimate& estimate, Explanation& explanation) {
  if (estimate.with_replacement) {
    explanation.notes.push_back(
        "unseen pool smaller than the opponents' hands; sampled with "
        "replacement");
  }
}

AgentDecision StoryDecision(const std::vector<const StoryCandidate*>& ranked,
                            double (*objective)(const VoteEstimate&),
                            double (*standard_error)(const VoteEstimate&),
                            std::size_t evaluated) {
  const StoryCandidate& best = *ranked.front();
  AgentDecision decision;
  decision.kind = ActionKind::kStory;
  decision.card = best.card.id;
  decision.phrase = best.phrase;
  Explanation& e = decision.explanation;
  e.value = objective(best.estimate);
  e.standard_error = standard_error(best.estimate);
  e.distribution = best.estimate.distribution;
  e.candidates_evaluated = static_cast<int>(evaluated);
  for (std::size_t i = 1; i < ranked.size() && i <= kRejectedShown; ++i) {
    e.rejected.push_back({ranked[i]->card.id, ranked[i]->phrase,
                          objective(ranked[i]->estimate)});
  }
  AddSamplingNotes(best.estimate, e);
  return decision;
}

double PScoringOf(const VoteEstimate& e) { return e.p_scoring; }
double PScoringSeOf(const VoteEstimate& e) { return e.p_scoring_se; }
double VotesOf(const VoteEstimate& e) { return e.expected_votes; }
double VotesSeOf(const VoteEstimate& e) { return e.expected_votes_se; }

std::vector<const StoryCandidate*> RankByPScoring(
    const std::vector<StoryCandidate>& candidates) {
  std::vector<const StoryCandidate*> ranked;
  for (const auto& c : candidates) ranked.push_back(&c);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const StoryCandidate* a, const StoryCandidate* b) {
                     if (a->estimate.p_scoring != b->estimate.p_scoring) {
                       return a->estimate.p_scoring > b->estimate.p_scoring;
                     }
                     return StoryKeyLess(*a, *b);
                   });
  return ranked;
}

AgentDecision Strategy1From(const std::vector<StoryCandidate>& candidates,
                            int n_players) {
  AgentDecision decision = StoryDecision(RankByPScoring(candidates), PScoringOf,
                                         PScoringSeOf, candidates.size());
  Explanation& e = decision.explanation;
  e.strategy = "storyteller_strategy1";
  e.objective = "p_scoring";
  e.summary = "Told '" + decision.phrase->Text() + "' for card " +
              decision.card + ": estimated probability " + Fixed(e.value) +
              " that between 1 and " + std::to_string(n_players - 2) +
              " of the " + std::to_string(n_players - 1) +
              " voters find it, the best of " +
              std::to_string(e.candidates_evaluated) + " card/phrase pairs.";
  return decision;
}

}  // namespace

std::vector<Phrase> GenerateCandidatePhrases(const Card& card,
                                             const CandidateLexicon& lexicon,
                                             const AssociationModel& model,
                                             int limit) {
  if (limit < 1) Fail(ErrorCode::kInvalidArgument, "limit must be >= 1");
  if (lexicon.size() == 0) Fail(ErrorCode::kEmptyLexicon, "lexicon is empty");
  std::vector<std::pair<double, const Phrase*>> scored;
  for (const Phrase& phrase : lexicon.phrases()) {
    scored.emplace_back(model.Score(card, phrase), &phrase);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return *a.second < *b.second;
  });
  std::vector<Phrase> out;
  for (std::size_t i = 0;
       i < scored.size() && i < static_cast<std::size_t>(limit); ++i) {
    out.push_back(*scored[i].second);
  }
  return out;
}

std::vector<StoryCandidate> EvaluateStoryCandidates(
    const GameContext& ctx, const CandidateLexicon& lexicon) {
  if (ctx.model == nullptr) {
    Fail(ErrorCode::kInvalidArgument, "context has no association model");
  }
  if (ctx.hand.empty()) Fail(ErrorCode::kInvalidArgument, "empty hand");
  std::vector<StoryCandidate> candidates;
  for (const Card& card : ctx.hand) {
    for (Phrase& phrase : GenerateCandidatePhrases(
             card, lexicon, *ctx.model, ctx.settings.candidate_limit)) {
      VoteEstimate estimate = EstimateVoteDistribution(card, phrase, ctx);
      candidates.push_back({card, std::move(phrase), std::move(estimate)});
    }
  }
  std::sort(candidates.begin(), candidates.end(), StoryKeyLess);
  return candidates;
}

AgentDecision StorytellerStrategy1(const GameContext& ctx,
                                   const CandidateLexicon& lexicon) {
  return Strategy1From(EvaluateStoryCandidates(ctx, lexicon), ctx.n_players);
}

AgentDecision StorytellerStrategy2(const GameContext& ctx,
                                   const CandidateLexicon& lexicon) {
  const std::vector<StoryCandidate> candidates =
      EvaluateStoryCandidates(ctx, lexicon);
  const double epsilon = ctx.settings.epsilon;

  std::vector<const StoryCandidate*> feasible;
  for (const auto& c : candidates) {
    if (c.estimate.p_any_vote > epsilon) feasible.push_back(&c);
  }
  if (feasible.empty()) {
    AgentDecision decision = Strategy1From(candidates, ctx.n_players);
    Explanation& e = decision.explanation;
    e.strategy = "storyteller_strategy2";
    e.notes.push_back("fallback: no pair reached P(n_V >= 1) > " +
                      Fixed(epsilon) + "; used strategy 1");
    e.summary += " (Fallback: no pair was likely enough to draw any vote.)";
    return decision;
  }

  std::stable_sort(feasible.begin(), feasible.end(),
                   [](const StoryCandidate* a, const StoryCandidate* b) {
                     if (a->estimate.expected_votes !=
                         b->estimate.expected_votes) {
                       return a->estimate.expected_votes <
                              b->estimate.expected_votes;
                     }
                     return StoryKeyLess(*a, *b);
                   });
  AgentDecision decision =
      StoryDecision(feasible, VotesOf, VotesSeOf, candidates.size());
  Explanation& e = decision.explanation;
  e.strategy = "storyteller_strategy2";
  e.objective = "expected_votes";
  e.notes.push_back(std::to_string(candidates.size() - feasible.size()) +
                    " pairs excluded by P(n_V >= 1) <= " + Fixed(epsilon));
  e.summary = "Told '" + decision.phrase->Text() + "' for card " +
              decision.card + ": fewest expected votes (" + Fixed(e.value) +
              ") among pairs with at least " + Fixed(epsilon) +
              " chance of one vote, keeping the other players' gains small.";
  return decision;
}

AgentDecision ChooseDecoy(const Phrase& phrase, const GameContext& ctx) {
  if (ctx.hand.empty()) Fail(ErrorCode::kInvalidArgument, "empty hand");
  std::vector<std::pair<const Card*, VoteEstimate>> scored;
  for (const Card& card : ctx.hand) {
    scored.emplace_back(&card, EstimateVoteDistribution(card, phrase, ctx));
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second.expected_votes != b.second.expected_votes) {
                       return a.second.expected_votes > b.second.expected_votes;
                     }
                     return a.first->id < b.first->id;
                   });

  AgentDecision decision;
  decision.kind = ActionKind::kDecoy;
  decision.card = scored.front().first->id;
  Explanation& e = decision.explanation;
  e.strategy = "decoy_max_votes";
  e.objective = "expected_votes";
  e.value = scored.front().second.expected_votes;
  e.standard_error = scored.front().second.expected_votes_se;
  e.distribution = scored.front().second.distribution;
  e.candidates_evaluated = static_cast<int>(scored.size());
  for (std::size_t i = 1; i < scored.size() && i <= kRejectedShown; ++i) {
    e.rejected.push_back(
        {scored[i].first->id, std::nullopt, scored[i].second.expected_votes});
  }
  AddSamplingNotes(scored.front().second, e);
  e.summary = "Played card " + decision.card + " as the decoy for '" +
              phrase.Text() + "': it is expected to lure " + Fixed(e.value) +
              " votes, the most of the " + std::to_string(scored.size()) +
              " cards in hand.";
  return decision;
}

VoteBelief ComputeVoteBelief(std::span<const Card> table,
                             const CardId& own_card, const Phrase& phrase,
                             const GameContext& ctx) {
  if (ctx.model == nullptr) {
    Fail(ErrorCode::kInvalidArgument, "context has no association model");
  }
  std::optional<std::size_t> own;
  std::vector<double> scores;
  VoteBelief belief;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].id == own_card) own = i;
    scores.push_back(ctx.model->Score(table[i], phrase));
    belief.cards.push_back(table[i].id);
  }
  if (!own) Fail(ErrorCode::kUnknownCard, "own card is not on the table");
  if (table.size() < 2) {
    Fail(ErrorCode::kOwnCardOnlyCard, "no card to vote for but one's own");
  }
  belief.probability =
      vote_model::VoterChoiceProbabilities(scores, own, ctx.settings.temperature);
  return belief;
}

AgentDecision ChooseVote(std::span<const Card> table, const CardId& own_card,
                         const Phrase& phrase, const GameContext& ctx) {
  const VoteBelief belief = ComputeVoteBelief(table, own_card, phrase, ctx);
  const ObjectiveMode mode = EndgameObjective(ctx);
  const bool block = mode == ObjectiveMode::kBlock;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < belief.cards.size(); ++i) {
    if (belief.cards[i] != own_card) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double pa = belief.probability[a], pb = belief.probability[b];
    if (pa != pb) return block ? pa < pb : pa > pb;
    return belief.cards[a] < belief.cards[b];
  });

  AgentDecision decision;
  decision.kind = ActionKind::kVote;
  decision.card = belief.cards[order.front()];
  Explanation& e = decision.explanation;
  e.strategy = block ? "vote_block" : "vote_max_belief";
  e.objective = "storyteller_belief";
  e.mode = block ? "block" : "normal";
  e.value = belief.probability[order.front()];
  e.candidates_evaluated = static_cast<int>(order.size());
  for (std::size_t i = 0; i < belief.cards.size(); ++i) {
    e.belief.emplace_back(belief.cards[i], belief.probability[i]);
  }
  for (std::size_t i = 1; i < order.size() && i <= kRejectedShown; ++i) {
    e.rejected.push_back(
        {belief.cards[order[i]], std::nullopt, belief.probability[order[i]]});
  }
  if (block) {
    e.summary = "Voted for card " + decision.card + ", the card least likely (" +
                Fixed(e.value) + ") to be the storyteller's under '" +
                phrase.Text() + "', because the storyteller is within " +
                std::to_string(kBlockMargin) + " points of winning.";
  } else {
    e.summary = "Voted for card " + decision.card +
                ", the card most likely (" + Fixed(e.value) +
                ") to be the storyteller's under '" + phrase.Text() + "'.";
  }
  return decision;
}

ObjectiveMode EndgameObjective(const GameContext& ctx) {
  if (ctx.self == ctx.storyteller) return ObjectiveMode::kNormal;
  if (ctx.storyteller < 0 ||
      ctx.storyteller >= static_cast<int>(ctx.scores.size())) {
    return ObjectiveMode::kNormal;
  }
  return ctx.scores[ctx.storyteller] >= ctx.target_score - kBlockMargin
             ? ObjectiveMode::kBlock
             : ObjectiveMode::kNormal;
}

}  // namespace dixit::agents
