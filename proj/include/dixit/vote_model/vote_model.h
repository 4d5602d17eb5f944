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

#ifndef DIXIT_VOTE_MODEL_VOTE_MODEL_H_
#define DIXIT_VOTE_MODEL_VOTE_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace dixit::vote_model {

inline constexpr double kDefaultTemperature = 1.0;
inline constexpr std::size_t kMaxEnumeratedVoters = 5;
inline constexpr std::size_t kMaxEnumeratedCards = 8;

// Probability mass over the number of votes the storyteller's card receives,
// indexed 0..voters.
class VoteCountDistribution {
 public:
  VoteCountDistribution() = default;
  // Throws kProbabilityOutOfRange unless every entry is in [0,1] and the
  // total is 1, both within 1e-9. Entries are clamped into [0,1].
  explicit VoteCountDistribution(std::vector<double> mass);

  static VoteCountDistribution PointMass(std::size_t votes,
                                         std::size_t num_voters);

  double operator[](std::size_t votes) const { return mass_[votes]; }
  std::size_t size() const { return mass_.size(); }
  std::size_t num_voters() const { return mass_.empty() ? 0 : mass_.size() - 1; }
  std::span<const double> mass() const { return mass_; }

 private:
  std::vector<double> mass_;
};

nlohmann::json ToJson(const VoteCountDistribution& dist);

// Softmax choice model of one voter over the revealed cards:
// p(c) proportional to exp(score(c) / temperature), with the voter's own card
// (if any) forced to zero.
//
// Throws kEmptyTable when fewer than two cards are shown or no card other than
// the voter's own remains, kBadTemperature for a non-positive or non-finite
// temperature, kBadScore for a non-finite score.
std::vector<double> VoterChoiceProbabilities(std::span<const double> scores,
                                             std::optional<std::size_t> own_card,
                                             double temperature);

// Allocation-free variant writing into `out` (same size as `scores`).
void VoterChoiceProbabilities(std::span<const double> scores,
                              std::optional<std::size_t> own_card,
                              double temperature, std::span<double> out);

// Exact Poisson-binomial mass of the vote count, given each voter's
// independent probability of picking the storyteller's card. Convolves one
// voter at a time. Throws kProbabilityOutOfRange.
VoteCountDistribution ComputeVoteCountDistribution(std::span<const double> p);

// Allocation-free variant; `out` must have p.size() + 1 entries.
void ComputeVoteCountMass(std::span<const double> p, std::span<double> out);

// Reference implementation: enumerates every joint choice of every voter.
// `choice_models[j]` is voter j's distribution over the table cards. Throws
// kTooLargeToEnumerate beyond 5 voters or 8 cards.
VoteCountDistribution BruteForceVoteCountDistribution(
    std::span<const std::vector<double>> choice_models,
    std::size_t storyteller_card);

// P(0 < n_V < n-1) for a game with n players (n-1 voters). Throws
// kSizeMismatch unless dist covers exactly 0..n-1.
double PScoring(const VoteCountDistribution& dist, int n_players);

// E[n_V].
double ExpectedVotes(const VoteCountDistribution& dist);

// P(n_V >= 1).
double ProbabilityAnyVote(const VoteCountDistribution& dist);

double TotalVariation(const VoteCountDistribution& a,
                      const VoteCountDistribution& b);

}  // namespace dixit::vote_model

#endif  // DIXIT_VOTE_MODEL_VOTE_MODEL_H_
