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

#include "dixit/agents/estimator.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dixit/common/error.h"
#include "dixit/common/rng.h"
#include "dixit/engine/game.h"

namespace dixit::agents {

namespace {

constexpr std::uint64_t kSampleSalt = 0x65737469;  // "esti"

// Running mean and standard error of the mean.
class MeanAccumulator {
 public:
  void Add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / count_;
    m2_ += delta * (x - mean_);
  }
  double mean() const { return mean_; }
  double standard_error() const {
    if (count_ < 2) return 0.0;
    return std::sqrt(m2_ / (count_ - 1) / count_);
  }

 private:
  long count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

VoteEstimate EstimateVoteDistribution(const Card& card, const Phrase& phrase,
                                      const GameContext& ctx) {
  if (ctx.model == nullptr) {
    Fail(ErrorCode::kInvalidArgument, "context has no association model");
  }
  if (ctx.unseen_pool.empty()) {
    Fail(ErrorCode::kEmptyUnseenPool, "no unseen cards to simulate opponents");
  }
  if (ctx.n_players < 2) Fail(ErrorCode::kInvalidArgument, "too few players");
  ctx.settings.Validate();

  const std::size_t pool_size = ctx.unseen_pool.size();
  const int opponents = ctx.n_players - 1;
  const std::size_t dealt = static_cast<std::size_t>(kHandSize) * opponents;
  const bool with_replacement = pool_size < dealt;

  // Rank the pool once: an opponent's decoy is its best-ranked card.
  std::vector<double> pool_scores(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) {
    pool_scores[i] = ctx.model->Score(ctx.unseen_pool[i], phrase);
  }
  std::vector<std::size_t> by_rank(pool_size);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) {
    if (pool_scores[a] != pool_scores[b]) return pool_scores[a] > pool_scores[b];
    return ctx.unseen_pool[a].id < ctx.unseen_pool[b].id;
  });
  std::vector<std::size_t> rank(pool_size);
  for (std::size_t r = 0; r < pool_size; ++r) rank[by_rank[r]] = r;

  std::vector<std::size_t> deck(pool_size);
  std::iota(deck.begin(), deck.end(), 0);
  std::vector<double> table(ctx.n_players);
  std::vector<double> choice(ctx.n_players);
  std::vector<double> p_target(opponents);
  std::vector<double> mass(ctx.n_players);
  std::vector<double> mass_total(ctx.n_players, 0.0);
  MeanAccumulator scoring, expected, any;

  table[0] = ctx.model->Score(card, phrase);
  Rng rng(DeriveSeed(ctx.seed, {kSampleSalt}));
  for (int s = 0; s < ctx.settings.samples; ++s) {
    std::size_t next = 0;
    for (int o = 0; o < opponents; ++o) {
      std::size_t best = pool_size;
      for (int h = 0; h < kHandSize; ++h) {
        std::size_t drawn;
        if (with_replacement) {
          drawn = rng.UniformIndex(pool_size);
        } else {
          // Partial Fisher-Yates: positions [0, next) hold this sample's deal.
          std::swap(deck[next], deck[next + rng.UniformIndex(pool_size - next)]);
          drawn = deck[next++];
        }
        best = std::min(best, rank[drawn]);
      }
      table[o + 1] = pool_scores[by_rank[best]];
    }
    for (int o = 0; o < opponents; ++o) {
      vote_model::VoterChoiceProbabilities(table, static_cast<std::size_t>(o + 1),
                                           ctx.settings.temperature, choice);
      p_target[o] = choice[0];
    }
    vote_model::ComputeVoteCountMass(p_target, mass);

    double interior = 0.0, mean_votes = 0.0;
    for (int k = 0; k < ctx.n_players; ++k) {
      mass_total[k] += mass[k];
      mean_votes += k * mass[k];
      if (k > 0 && k < ctx.n_players - 1) interior += mass[k];
    }
    scoring.Add(interior);
    expected.Add(mean_votes);
    any.Add(1.0 - mass[0]);
  }

  double total = 0.0;
  for (double& m : mass_total) {
    m /= ctx.settings.samples;
    total += m;
  }
  for (double& m : mass_total) m /= total;

  VoteEstimate estimate;
  estimate.distribution = vote_model::VoteCountDistribution(std::move(mass_total));
  estimate.p_scoring = scoring.mean();
  estimate.p_scoring_se = scoring.standard_error();
  estimate.expected_votes = expected.mean();
  estimate.expected_votes_se = expected.standard_error();
  estimate.p_any_vote = any.mean();
  estimate.p_any_vote_se = any.standard_error();
  estimate.samples = ctx.settings.samples;
  estimate.with_replacement = with_replacement;
  return estimate;
}

}  // namespace dixit::agents
