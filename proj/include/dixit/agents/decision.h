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

#ifndef DIXIT_AGENTS_DECISION_H_
#define DIXIT_AGENTS_DECISION_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dixit/engine/card.h"
#include "dixit/engine/transcript.h"
#include "dixit/vote_model/vote_model.h"
#include "json.hpp"

namespace dixit::agents {

struct Alternative {
  CardId card;
  std::optional<Phrase> phrase;
  double value = 0.0;
};

// Why an agent acted as it did. Every agent action carries one.
struct Explanation {
  std::string strategy;   // e.g. "storyteller_strategy1"
  std::string objective;  // e.g. "p_scoring"; "none" for random baselines
  std::string mode = "normal";  // "normal" or "block"
  double value = 0.0;
  double standard_error = 0.0;
  std::optional<vote_model::VoteCountDistribution> distribution;
  std::vector<std::pair<CardId, double>> belief;  // votes only
  std::vector<Alternative> rejected;  // best first, at most three
  int candidates_evaluated = 0;
  std::vector<std::string> notes;
  std::string summary;
};

struct AgentDecision {
  ActionKind kind = ActionKind::kStory;
  CardId card;
  std::optional<Phrase> phrase;
  Explanation explanation;
};

nlohmann::json ExplanationToJson(const Explanation& explanation);

// True when a serialized explanation names its strategy and objective and
// carries a non-empty summary.
bool IsPopulatedExplanation(const nlohmann::json& explanation);

}  // namespace dixit::agents

#endif  // DIXIT_AGENTS_DECISION_H_
