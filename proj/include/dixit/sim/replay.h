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

#ifndef DIXIT_SIM_REPLAY_H_
#define DIXIT_SIM_REPLAY_H_

#include <filesystem>

#include "dixit/engine/game.h"
#include "dixit/engine/transcript.h"

namespace dixit::sim {

// Re-applies every recorded action to a fresh game built from the header,
// checking each round record and the end record against the replayed state.
// The recorded seed is always the one used. Any mismatch, engine rejection or
// missing end record raises kCorruptTranscript.
GameState ReplayTranscript(const Transcript& transcript);

GameState Replay(const std::filesystem::path& path);

}  // namespace dixit::sim

#endif  // DIXIT_SIM_REPLAY_H_
