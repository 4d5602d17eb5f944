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

#ifndef DIXIT_ENGINE_TRANSCRIPT_H_
#define DIXIT_ENGINE_TRANSCRIPT_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "dixit/engine/game.h"
#include "json.hpp"

namespace dixit {

// Transcript file: JSON lines. The first record is the header, the last is
// the end record, and in between come action and round records in the order
// they happened:
//
//   {"record":"header","format":"dixit-transcript","version":1,
//    "game_index":0,"config":{...},"deck":[card...],"seats":[seat...]}
//   {"record":"action","kind":"story"|"decoy"|"vote","round":0,"player":2,
//    "card":"c07","phrase":"old tower"?,"explanation":{...}?}
//   {"record":"round","round":0,"storyteller":2,"phrase":"old tower",
//    "table":[{"card":..,"owner":..}],"votes":[..|null],"points":[..],
//    "n_v":1,"scores":[..]}
//   {"record":"end","rounds":12,"scores":[..],"winners":[..]}
//
// The deck is stored in file order, before the seeded shuffle, so the header
// alone reconstructs the initial state.

inline constexpr int kTranscriptVersion = 1;

enum class ActionKind { kStory, kDecoy, kVote };

std::string_view ActionKindName(ActionKind kind);
ActionKind ActionKindFromName(std::string_view name);

struct SeatRecord {
  std::string kind;  // "agent" or "human"
  int slot = 0;      // tournament slot or lobby join order
  nlohmann::json agent;  // agent spec for agent seats

  bool operator==(const SeatRecord&) const = default;
};

struct TranscriptHeader {
  int game_index = 0;
  GameConfig config;
  std::vector<Card> deck;
  std::vector<SeatRecord> seats;

  bool operator==(const TranscriptHeader&) const = default;
};

struct ActionRecord {
  ActionKind kind = ActionKind::kStory;
  int round = 0;
  int player = 0;
  CardId card;
  std::optional<Phrase> phrase;
  std::optional<nlohmann::json> explanation;

  bool operator==(const ActionRecord&) const = default;
};

struct RoundRecord {
  int round = 0;
  int storyteller = 0;
  Phrase phrase;
  std::vector<TableEntry> table;
  std::vector<std::optional<CardId>> votes;
  std::vector<int> points;
  int storyteller_votes = 0;
  std::vector<int> scores;  // scoreboard after this round

  bool operator==(const RoundRecord&) const = default;
};

struct EndRecord {
  int rounds = 0;
  std::vector<int> scores;
  std::vector<int> winners;

  bool operator==(const EndRecord&) const = default;
};

using TranscriptEntry = std::variant<ActionRecord, RoundRecord>;

struct Transcript {
  TranscriptHeader header;
  std::vector<TranscriptEntry> entries;
  std::optional<EndRecord> end;

  bool operator==(const Transcript&) const = default;
};

// Builds a round record from a state in phase RoundScored.
RoundRecord MakeRoundRecord(const GameState& state);
// Builds the end record from a state in phase GameOver.
EndRecord MakeEndRecord(const GameState& state);

nlohmann::json HeaderToJson(const TranscriptHeader& header);
nlohmann::json EntryToJson(const TranscriptEntry& entry);
nlohmann::json EndToJson(const EndRecord& end);

void WriteTranscript(std::ostream& out, const Transcript& transcript);
void WriteTranscriptFile(const std::filesystem::path& path,
                         const Transcript& transcript);

// Any malformed record raises kCorruptTranscript with its line number. A
// missing end record is allowed here; Replay rejects it.
Transcript ReadTranscript(std::istream& in, const std::string& source);
Transcript ReadTranscriptFile(const std::filesystem::path& path);

}  // namespace dixit

#endif  // DIXIT_ENGINE_TRANSCRIPT_H_
