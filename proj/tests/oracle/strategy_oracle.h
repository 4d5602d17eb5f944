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

#ifndef DIXIT_TESTS_ORACLE_STRATEGY_ORACLE_H_
#define DIXIT_TESTS_ORACLE_STRATEGY_ORACLE_H_

// Exhaustive checks of the agent strategies on instances small enough to
// enumerate: n = 4, a 2-card hand, 3 phrases, 6 unseen cards. The library's
// decision is compared with the exact optimum whenever the exact gap between
// the best and runner-up candidate exceeds 3 Monte-Carlo standard errors.

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "dixit/agents/association.h"
#include "dixit/agents/context.h"
#include "dixit/agents/estimator.h"
#include "dixit/agents/lexicon.h"
#include "dixit/agents/strategies.h"
#include "dixit/common/rng.h"
#include "oracle/oracles.h"

namespace dixit::oracle {

struct TinyInstance {
  std::unique_ptr<agents::SeededRandomModel> model;
  std::shared_ptr<const agents::CandidateLexicon> lexicon;
  agents::GameContext ctx;  // storyteller's view
};

inline TinyInstance MakeTinyInstance(std::uint64_t seed, int samples) {
  TinyInstance t;
  Rng rng(seed);
  t.model = std::make_unique<agents::SeededRandomModel>(seed * 7919 + 1);
  std::vector<agents::LexiconEntry> entries;
  for (int i = 0; i < 3; ++i) {
    entries.push_back({ParsePhrase("w" + std::to_string(seed) + "_" +
                                   std::to_string(i)),
                       std::nullopt});
  }
  t.lexicon = std::make_shared<const agents::CandidateLexicon>(entries, 4);
  agents::GameContext& ctx = t.ctx;
  ctx.n_players = 4;
  ctx.self = 0;
  ctx.storyteller = 0;
  ctx.scores = {0, 0, 0, 0};
  for (int i = 0; i < 8; ++i) {
    Card card;
    card.id = "t" + std::to_string(i);
    (i < 2 ? ctx.hand : ctx.unseen_pool).push_back(card);
  }
  ctx.model = t.model.get();
  ctx.settings.samples = samples;
  ctx.settings.candidate_limit = 3;
  // Gentle enough that voters disagree, sharp enough that choices matter.
  ctx.settings.temperature = 0.05 + 0.45 * rng.UniformUnit();
  ctx.seed = rng.NextU64();
  return t;
}

struct OracleVerdict {
  bool gapped = false;
  bool agrees = false;
  std::string detail;
};

inline std::vector<double> PoolScores(const agents::GameContext& ctx,
                                      const Phrase& phrase) {
  std::vector<double> pool;
  for (const Card& c : ctx.unseen_pool) pool.push_back(ctx.model->Score(c, phrase));
  return pool;
}

inline ExactObjectives ExactFor(const agents::GameContext& ctx, const Card& card,
                                const Phrase& phrase) {
  return ExactFocalObjectives(ctx.model->Score(card, phrase),
                              PoolScores(ctx, phrase), ctx.n_players - 1,
                              ctx.settings.temperature);
}

struct PairValue {
  CardId card;
  Phrase phrase;
  ExactObjectives exact;
  agents::VoteEstimate estimate;
};

inline std::vector<PairValue> AllPairs(const TinyInstance& t) {
  std::vector<PairValue> out;
  for (const Card& card : t.ctx.hand) {
    for (const Phrase& phrase : t.lexicon->phrases()) {
      out.push_back({card.id, phrase, ExactFor(t.ctx, card, phrase),
                     agents::EstimateVoteDistribution(card, phrase, t.ctx)});
    }
  }
  return out;
}

// Best two by `value` (larger is better); gapped when their exact values
// differ by more than 3 of the larger standard error.
template <typename Value, typename Se>
OracleVerdict CompareArgBest(const std::vector<PairValue>& pairs,
                             const CardId& chosen_card,
                             const std::optional<Phrase>& chosen_phrase,
                             Value value, Se se) {
  std::vector<const PairValue*> order;
  for (const PairValue& p : pairs) order.push_back(&p);
  std::sort(order.begin(), order.end(), [&](const PairValue* a, const PairValue* b) {
    return value(*a) > value(*b);
  });
  OracleVerdict v;
  const double gap = value(*order[0]) - value(*order[1]);
  v.gapped = gap > 3.0 * std::max(se(*order[0]), se(*order[1]));
  v.agrees = order[0]->card == chosen_card &&
             (!chosen_phrase || order[0]->phrase == *chosen_phrase);
  v.detail = "oracle " + order[0]->card + "/" + order[0]->phrase.Text() +
             " chosen " + chosen_card +
             (chosen_phrase ? "/" + chosen_phrase->Text() : std::string()) +
             " gap " + std::to_string(gap);
  return v;
}

inline OracleVerdict CheckStrategy1(const TinyInstance& t) {
  const std::vector<PairValue> pairs = AllPairs(t);
  agents::AgentDecision d = agents::StorytellerStrategy1(t.ctx, *t.lexicon);
  return CompareArgBest(
      pairs, d.card, d.phrase,
      [](const PairValue& p) { return p.exact.p_scoring; },
      [](const PairValue& p) { return p.estimate.p_scoring_se; });
}

inline OracleVerdict CheckStrategy2(const TinyInstance& t) {
  const std::vector<PairValue> pairs = AllPairs(t);
  const double eps = t.ctx.settings.epsilon;
  agents::AgentDecision d = agents::StorytellerStrategy2(t.ctx, *t.lexicon);
  std::vector<PairValue> eligible;
  bool filter_clear = true;
  for (const PairValue& p : pairs) {
    if (std::abs(p.exact.p_any_vote - eps) <= 3.0 * p.estimate.p_any_vote_se) {
      filter_clear = false;
    }
    if (p.exact.p_any_vote > eps) eligible.push_back(p);
  }
  OracleVerdict v;
  if (eligible.size() >= 2) {
    v = CompareArgBest(
        eligible, d.card, d.phrase,
        [](const PairValue& p) { return -p.exact.expected_votes; },
        [](const PairValue& p) { return p.estimate.expected_votes_se; });
  } else if (eligible.size() == 1) {
    v.gapped = true;
    v.agrees = eligible[0].card == d.card && eligible[0].phrase == *d.phrase;
    v.detail = "single eligible pair";
  } else {
    v = CompareArgBest(
        pairs, d.card, d.phrase,
        [](const PairValue& p) { return p.exact.p_scoring; },
        [](const PairValue& p) { return p.estimate.p_scoring_se; });
  }
  v.gapped = v.gapped && filter_clear;
  return v;
}

// The same instance seen by seat 1 choosing a decoy for the first phrase.
inline OracleVerdict CheckDecoy(const TinyInstance& t) {
  agents::GameContext ctx = t.ctx;
  ctx.self = 1;
  const Phrase& phrase = t.lexicon->phrases().front();
  std::vector<PairValue> pairs;
  for (const Card& card : ctx.hand) {
    pairs.push_back({card.id, phrase, ExactFor(ctx, card, phrase),
                     agents::EstimateVoteDistribution(card, phrase, ctx)});
  }
  agents::AgentDecision d = agents::ChooseDecoy(phrase, ctx);
  return CompareArgBest(
      pairs, d.card, std::nullopt,
      [](const PairValue& p) { return p.exact.expected_votes; },
      [](const PairValue& p) { return p.estimate.expected_votes_se; });
}

// Seat 1 votes on a table of its first hand card plus three unseen cards.
// `block` puts the storyteller within reach of the target.
inline OracleVerdict CheckVote(const TinyInstance& t, bool block) {
  agents::GameContext ctx = t.ctx;
  ctx.self = 1;
  ctx.storyteller = 0;
  ctx.target_score = 30;
  ctx.scores = {block ? 28 : 10, 12, 3, 4};
  std::vector<Card> table = {ctx.unseen_pool[0], ctx.hand[0],
                             ctx.unseen_pool[1], ctx.unseen_pool[2]};
  const Phrase& phrase = t.lexicon->phrases().back();
  std::vector<double> scores;
  for (const Card& c : table) scores.push_back(ctx.model->Score(c, phrase));
  const std::vector<double> belief = Softmax(scores, 1, ctx.settings.temperature);
  std::vector<std::size_t> candidates = {0, 2, 3};
  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return block ? belief[a] < belief[b] : belief[a] > belief[b];
  });
  agents::AgentDecision d = agents::ChooseVote(table, ctx.hand[0].id, phrase, ctx);
  OracleVerdict v;
  v.gapped = std::abs(belief[candidates[0]] - belief[candidates[1]]) > 1e-12;
  v.agrees = table[candidates[0]].id == d.card;
  v.detail = "oracle " + table[candidates[0]].id + " chosen " + d.card;
  return v;
}

}  // namespace dixit::oracle

#endif  // DIXIT_TESTS_ORACLE_STRATEGY_ORACLE_H_
