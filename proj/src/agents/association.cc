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

#include "dixit/agents/association.h"

#include <cmath>
#include <set>

#include "dixit/common/error.h"
#include "dixit/common/rng.h"

namespace dixit::agents {

double TagJaccardModel::Score(const Card& card, const Phrase& phrase) const {
  std::set<std::string> tokens;
  for (const std::string& token : phrase.tokens()) tokens.insert(ToLower(token));
  std::size_t shared = 0;
  for (const std::string& token : tokens) shared += card.tags.count(token);
  const std::size_t united = card.tags.size() + tokens.size() - shared;
  return united == 0 ? 0.0 : static_cast<double>(shared) / united;
}

double FeatureCosineModel::Score(const Card& card,
                                 const Phrase& phrase) const {
  const std::vector<double>* vec = lexicon_->VectorFor(phrase);
  if (!card.features || vec == nullptr) return 0.0;
  const std::vector<double>& features = *card.features;
  if (features.size() != vec->size() || features.empty()) return 0.0;
  double dot = 0.0, a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    dot += features[i] * (*vec)[i];
    a += features[i] * features[i];
    b += (*vec)[i] * (*vec)[i];
  }
  if (a == 0.0 || b == 0.0) return 0.0;
  return dot / std::sqrt(a * b);
}

double SeededRandomModel::Score(const Card& card, const Phrase& phrase) const {
  std::string key = card.id;
  key += '\x1f';
  key += phrase.Text();
  return static_cast<double>(StableHash(key, seed_) >> 11) * 0x1.0p-53;
}

bool IsKnownAssociationModel(std::string_view name) {
  return name == "tag_jaccard" || name == "feature_cosine" ||
         name == "seeded_random";
}

std::unique_ptr<AssociationModel> MakeAssociationModel(
    std::string_view name, std::shared_ptr<const CandidateLexicon> lexicon,
    std::uint64_t seed) {
  if (name == "tag_jaccard") return std::make_unique<TagJaccardModel>();
  if (name == "feature_cosine") {
    if (!lexicon) Fail(ErrorCode::kInvalidArgument, "feature_cosine needs a lexicon");
    return std::make_unique<FeatureCosineModel>(std::move(lexicon));
  }
  if (name == "seeded_random") return std::make_unique<SeededRandomModel>(seed);
  Fail(ErrorCode::kInvalidArgument,
       "unknown association model '" + std::string(name) + "'");
}

}  // namespace dixit::agents
