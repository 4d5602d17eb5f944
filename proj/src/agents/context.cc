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

#include "dixit/agents/context.h"

#include <cmath>

#include "dixit/common/error.h"

namespace dixit::agents {

void StrategySettings::Validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    Fail(ErrorCode::kBadTemperature, "temperature must be positive");
  }
  if (samples < 1) Fail(ErrorCode::kInvalidArgument, "samples must be >= 1");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "epsilon must be in [0,1)");
  }
  if (candidate_limit < 1) {
    Fail(ErrorCode::kInvalidArgument, "candidate_limit must be >= 1");
  }
}

nlohmann::json SettingsToJson(const StrategySettings& settings) {
  return {{"temperature", settings.temperature},
          {"samples", settings.samples},
          {"epsilon", settings.epsilon},
          {"candidate_limit", settings.candidate_limit}};
}

StrategySettings SettingsFromJson(const nlohmann::json& record) {
  StrategySettings settings;
  settings.temperature = record.value("temperature", settings.temperature);
  settings.samples = record.value("samples", settings.samples);
  settings.epsilon = record.value("epsilon", settings.epsilon);
  settings.candidate_limit =
      record.value("candidate_limit", settings.candidate_limit);
  settings.Validate();
  return settings;
}

}  // namespace dixit::agents
