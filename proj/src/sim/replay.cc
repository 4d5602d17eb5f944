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

#include "dixit/sim/replay.h"

#include <string>

#include "dixit/common/error.h"

namespace dixit::sim {

namespace {

void Apply(GameState& state, const ActionRecord& action) {
  if (action.round != state.round_index) {
    Fail(ErrorCode::kCorruptTranscript,
         "action for round " + std::to_string(action.round) +
             " during round " + std::to_string(state.round_index));
  }
  switch (action.kind) {
    case ActionKind::kStory:
      if (action.player != state.storyteller || !action.phrase) {
        Fail(ErrorCode::kCorruptTranscript, "malformed story action");
      }
      StorytellerSubmit(state, action.card, *action.phrase);
      break;
    case ActionKind::kDecoy:
      DecoySubmit(state, action.player, action.card);
      break;
    case ActionKind::kVote:
      VoteSubmit(state, action.player, action.card);
      break;
  }
}

}  // namespace

GameState ReplayTranscript(const Transcript& transcript) {
  try {
    GameState state = NewGame(transcript.header.deck, transcript.header.config);
    for (const TranscriptEntry& entry : transcript.entries) {
      if (state.phase == Phase::kGameOver) {
        Fail(ErrorCode::kCorruptTranscript, "records after game over");
      }
      if (const auto* action = std::get_if<ActionRecord>(&entry)) {
        Apply(state, *action);
        continue;
      }
      const auto& round = std::get<RoundRecord>(entry);
      if (state.phase != Phase::kRoundScored) {
        Fail(ErrorCode::kCorruptTranscript, "round record before voting ended");
      }
      if (!(MakeRoundRecord(state) == round)) {
        Fail(ErrorCode::kCorruptTranscript,
             "round " + std::to_string(round.round) +
                 " does not match the replayed result");
      }
      AdvanceRound(state);
    }
    if (!transcript.end) {
      Fail(ErrorCode::kCorruptTranscript, "transcript is truncated");
    }
    if (state.phase != Phase::kGameOver) {
      Fail(ErrorCode::kCorruptTranscript, "game did not finish");
    }
    if (!(MakeEndRecord(state) == *transcript.end)) {
      Fail(ErrorCode::kCorruptTranscript, "final scoreboard does not match");
    }
    return state;
  } catch (const DixitError& e) {
    if (e.code() == ErrorCode::kCorruptTranscript) throw;
    throw DixitError(ErrorCode::kCorruptTranscript, e.what());
  }
}

GameState Replay(const std::filesystem::path& path) {
  return ReplayTranscript(ReadTranscriptFile(path));
}

}  // namespace dixit::sim
