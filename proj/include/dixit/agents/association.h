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

#ifndef DIXIT_AGENTS_ASSOCIATION_H_
#define DIXIT_AGENTS_ASSOCIATION_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "dixit/agents/lexicon.h"
#include "dixit/engine/card.h"

namespace dixit::agents {

// How well a phrase fits a card. Implementations must be deterministic for
// fixed parameters and return finite values. This is the seam where real
// perception and language models plug in.
class AssociationModel {
 public:
  virtual ~AssociationModel() = default;
  virtual double Score(const Card& card, const Phrase& phrase) const = 0;
  virtual std::string_view name() const = 0;
};

// |tags ∩ tokens| / |tags ∪ tokens| with tokens lowercased.
class TagJaccardModel : public AssociationModel {
 public:
  double Score(const Card& card, const Phrase& phrase) const override;
  std::string_view name() const override { return "tag_jaccard"; }
};

// Cosine between the card's feature vector and the phrase vector from the
// lexicon. Zero when either vector is missing, empty, zero, or the lengths
// differ.
class FeatureCosineModel : public AssociationModel {
 public:
  explicit FeatureCosineModel(std::shared_ptr<const CandidateLexicon> lexicon)
      : lexicon_(std::move(lexicon)) {}
  double Score(const Card& card, const Phrase& phrase) const override;
  std::string_view name() const override { return "feature_cosine"; }

 private:
  std::shared_ptr<const CandidateLexicon> lexicon_;
};

// Uniform [0,1) value from a stable hash of (seed, card id, phrase).
class SeededRandomModel : public AssociationModel {
 public:
  explicit SeededRandomModel(std::uint64_t seed) : seed_(seed) {}
  double Score(const Card& card, const Phrase& phrase) const override;
  std::string_view name() const override { return "seeded_random"; }

 private:
  std::uint64_t seed_;
};

bool IsKnownAssociationModel(std::string_view name);

// Builds "tag_jaccard", "feature_cosine" or "seeded_random". Throws
// kInvalidArgument for other names.
std::unique_ptr<AssociationModel> MakeAssociationModel(
    std::string_view name, std::shared_ptr<const CandidateLexicon> lexicon,
    std::uint64_t seed);

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_ASSOCIATION_H_
