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

#ifndef DIXIT_AGENTS_CONTEXT_H_
#define DIXIT_AGENTS_CONTEXT_H_

#include <cstdint>
#include <vector>

#include "dixit/agents/association.h"
#include "dixit/engine/card.h"
#include "json.hpp"

namespace dixit::agents {

struct StrategySettings {
  double temperature = 1.0;  // voter softmax temperature
  int samples = 2000;        // Monte-Carlo samples per estimate
  double epsilon = 0.05;     // Strategy 2 floor on P(n_V >= 1)
  int candidate_limit = 8;   // phrases considered per card

  void Validate() const;
};

nlohmann::json SettingsToJson(const StrategySettings& settings);
StrategySettings SettingsFromJson(const nlohmann::json& record);

// Everything an agent may use for one decision. `unseen_pool` holds the
// cards the agent has not seen: the catalog minus its own hand, earlier
// discards and the current table.
struct GameContext {
  int n_players = 4;
  int self = 0;
  int storyteller = 0;
  int target_score = 30;
  std::vector<int> scores;
  std::vector<Card> hand;
  std::vector<Card> unseen_pool;
  const AssociationModel* model = nullptr;
  StrategySettings settings;
  // Every estimate made under this context replays the stream seeded here,
  // so all candidates are compared on common random numbers.
  std::uint64_t seed = 0;
};

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_CONTEXT_H_
