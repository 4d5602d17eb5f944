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

#include "dixit/vote_model/vote_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dixit/common/error.h"

namespace dixit::vote_model {

namespace {
constexpr double kMassTolerance = 1e-9;
}  // namespace

VoteCountDistribution::VoteCountDistribution(std::vector<double> mass)
    : mass_(std::move(mass)) {
  if (mass_.empty()) {
    Fail(ErrorCode::kProbabilityOutOfRange, "empty distribution");
  }
  double total = 0.0;
  for (double& m : mass_) {
    // Sums of products can land an ulp outside [0,1].
    if (!(m >= -kMassTolerance && m <= 1.0 + kMassTolerance)) {
      Fail(ErrorCode::kProbabilityOutOfRange,
           "mass " + std::to_string(m) + " outside [0,1]");
    }
    m = std::clamp(m, 0.0, 1.0);
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    Fail(ErrorCode::kProbabilityOutOfRange,
         "mass sums to " + std::to_string(total));
  }
}

VoteCountDistribution VoteCountDistribution::PointMass(std::size_t votes,
                                                       std::size_t num_voters) {
  std::vector<double> mass(num_voters + 1, 0.0);
  mass.at(votes) = 1.0;
  return VoteCountDistribution(std::move(mass));
}

nlohmann::json ToJson(const VoteCountDistribution& dist) {
  return std::vector<double>(dist.mass().begin(), dist.mass().end());
}

void VoterChoiceProbabilities(std::span<const double> scores,
                              std::optional<std::size_t> own_card,
                              double temperature, std::span<double> out) {
  if (scores.size() < 2) {
    Fail(ErrorCode::kEmptyTable, "a vote needs at least two cards");
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    Fail(ErrorCode::kBadTemperature,
         "temperature must be positive, got " + std::to_string(temperature));
  }
  if (own_card && *own_card >= scores.size()) {
    Fail(ErrorCode::kUnknownCard, "own card index out of range");
  }
  double best = -INFINITY;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      Fail(ErrorCode::kBadScore, "non-finite association score");
    }
    if (i != own_card) best = std::max(best, scores[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out[i] = (i == own_card) ? 0.0 : std::exp((scores[i] - best) / temperature);
    total += out[i];
  }
  for (double& p : out) p /= total;
}

std::vector<double> VoterChoiceProbabilities(std::span<const double> scores,
                                             std::optional<std::size_t> own_card,
                                             double temperature) {
  std::vector<double> out(scores.size());
  VoterChoiceProbabilities(scores, own_card, temperature, out);
  return out;
}

void ComputeVoteCountMass(std::span<const double> p, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  out[0] = 1.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double pj = p[j];
    if (!(pj >= 0.0 && pj <= 1.0)) {
      Fail(ErrorCode::kProbabilityOutOfRange,
           "voter probability " + std::to_string(pj) + " outside [0,1]");
    }
    // After voter j, out[k] holds P(k of the first j+1 voters pick it).
    for (std::size_t k = j + 1; k > 0; --k) {
      out[k] = out[k] * (1.0 - pj) + out[k - 1] * pj;
    }
    out[0] *= 1.0 - pj;
  }
}

VoteCountDistribution ComputeVoteCountDistribution(std::span<const double> p) {
  std::vector<double> mass(p.size() + 1);
  ComputeVoteCountMass(p, mass);
  return VoteCountDistribution(std::move(mass));
}

VoteCountDistribution BruteForceVoteCountDistribution(
    std::span<const std::vector<double>> choice_models,
    std::size_t storyteller_card) {
  const std::size_t voters = choice_models.size();
  if (voters > kMaxEnumeratedVoters) {
    Fail(ErrorCode::kTooLargeToEnumerate,
         std::to_string(voters) + " voters exceeds enumeration limit");
  }
  const std::size_t cards = voters == 0 ? 1 : choice_models[0].size();
  if (cards > kMaxEnumeratedCards) {
    Fail(ErrorCode::kTooLargeToEnumerate,
         std::to_string(cards) + " cards exceeds enumeration limit");
  }
  for (const auto& model : choice_models) {
    if (model.size() != cards) {
      Fail(ErrorCode::kSizeMismatch, "voters see different tables");
    }
  }
  if (storyteller_card >= cards && voters > 0) {
    Fail(ErrorCode::kUnknownCard, "storyteller card index out of range");
  }

  std::vector<double> mass(voters + 1, 0.0);
  std::vector<std::size_t> choice(voters, 0);
  while (true) {
    double joint = 1.0;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < voters; ++j) {
      joint *= choice_models[j][choice[j]];
      hits += choice[j] == storyteller_card;
    }
    mass[hits] += joint;
    // Odometer increment over the joint choice space.
    std::size_t j = 0;
    while (j < voters && ++choice[j] == cards) choice[j++] = 0;
    if (j == voters) break;
  }
  return VoteCountDistribution(std::move(mass));
}

double PScoring(const VoteCountDistribution& dist, int n_players) {
  if (n_players < 2 || dist.size() != static_cast<std::size_t>(n_players)) {
    Fail(ErrorCode::kSizeMismatch,
         "distribution covers " + std::to_string(dist.size()) +
             " outcomes, game has " + std::to_string(n_players) + " players");
  }
  double interior = 0.0;
  for (int k = 1; k < n_players - 1; ++k) interior += dist[k];
  return interior;
}

double ExpectedVotes(const VoteCountDistribution& dist) {
  double expected = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) expected += k * dist[k];
  return expected;
}

double ProbabilityAnyVote(const VoteCountDistribution& dist) {
  double any = 0.0;
  for (std::size_t k = 1; k < dist.size(); ++k) any += dist[k];
  return any;
}

double TotalVariation(const VoteCountDistribution& a,
                      const VoteCountDistribution& b) {
  const std::size_t size = std::max(a.size(), b.size());
  double total = 0.0;
  for (std::size_t k = 0; k < size; ++k) {
    const double pa = k < a.size() ? a[k] : 0.0;
    const double pb = k < b.size() ? b[k] : 0.0;
    total += std::abs(pa - pb);
  }
  return 0.5 * total;
}

}  // namespace dixit::vote_model
