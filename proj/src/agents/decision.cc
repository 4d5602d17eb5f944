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

#include "dixit/agents/decision.h"

namespace dixit::agents {

nlohmann::json ExplanationToJson(const Explanation& explanation) {
  nlohmann::json out = {{"strategy", explanation.strategy},
                        {"objective", explanation.objective},
                        {"mode", explanation.mode},
                        {"value", explanation.value},
                        {"standard_error", explanation.standard_error},
                        {"candidates_evaluated", explanation.candidates_evaluated},
                        {"summary", explanation.summary}};
  if (explanation.distribution) {
    out["vote_distribution"] = vote_model::ToJson(*explanation.distribution);
  }
  if (!explanation.belief.empty()) {
    nlohmann::json belief = nlohmann::json::array();
    for (const auto& [card, p] : explanation.belief) {
      belief.push_back({{"card", card}, {"probability", p}});
    }
    out["belief"] = std::move(belief);
  }
  nlohmann::json rejected = nlohmann::json::array();
  for (const Alternative& alt : explanation.rejected) {
    nlohmann::json a = {{"card", alt.card}, {"value", alt.value}};
    if (alt.phrase) a["phrase"] = alt.phrase->Text();
    rejected.push_back(std::move(a));
  }
  out["rejected"] = std::move(rejected);
  out["notes"] = explanation.notes;
  return out;
}

bool IsPopulatedExplanation(const nlohmann::json& explanation) {
  if (!explanation.is_object()) return false;
  for (const char* key : {"strategy", "objective", "summary"}) {
    auto it = explanation.find(key);
    if (it == explanation.end() || !it->is_string() ||
        it->get<std::string>().empty()) {
      return false;
    }
  }
  return true;
}

}  // namespace dixit::agents
