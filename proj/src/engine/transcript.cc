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

#include "dixit/engine/transcript.h"

#include <fstream>

#include "dixit/common/error.h"
#include "dixit/common/json_lines.h"

namespace dixit {

namespace {

nlohmann::json OptionalId(const std::optional<CardId>& id) {
  return id ? nlohmann::json(*id) : nlohmann::json(nullptr);
}

std::optional<CardId> OptionalIdFromJson(const nlohmann::json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<CardId>();
}

ActionRecord ActionFromJson(const nlohmann::json& r) {
  ActionRecord action;
  action.kind = ActionKindFromName(r.at("kind").get<std::string>());
  action.round = r.at("round").get<int>();
  action.player = r.at("player").get<int>();
  action.card = r.at("card").get<CardId>();
  if (r.contains("phrase")) {
    action.phrase = ParsePhrase(r["phrase"].get<std::string>());
  }
  if (r.contains("explanation")) action.explanation = r["explanation"];
  return action;
}

RoundRecord RoundFromJson(const nlohmann::json& r) {
  RoundRecord round;
  round.round = r.at("round").get<int>();
  round.storyteller = r.at("storyteller").get<int>();
  round.phrase = ParsePhrase(r.at("phrase").get<std::string>());
  for (const auto& entry : r.at("table")) {
    round.table.push_back(
        {entry.at("card").get<CardId>(), entry.at("owner").get<int>()});
  }
  for (const auto& vote : r.at("votes")) {
    round.votes.push_back(OptionalIdFromJson(vote));
  }
  round.points = r.at("points").get<std::vector<int>>();
  round.storyteller_votes = r.at("n_v").get<int>();
  round.scores = r.at("scores").get<std::vector<int>>();
  return round;
}

}  // namespace

std::string_view ActionKindName(ActionKind kind) {
  switch (kind) {
    case ActionKind::kStory: return "story";
    case ActionKind::kDecoy: return "decoy";
    case ActionKind::kVote: return "vote";
  }
  return "?";
}

ActionKind ActionKindFromName(std::string_view name) {
  if (name == "story") return ActionKind::kStory;
  if (name == "decoy") return ActionKind::kDecoy;
  if (name == "vote") return ActionKind::kVote;
  Fail(ErrorCode::kParseError, "unknown action kind '" + std::string(name) + "'");
}

RoundRecord MakeRoundRecord(const GameState& state) {
  if (state.phase != Phase::kRoundScored) {
    Fail(ErrorCode::kWrongPhase, "round record needs a scored round");
  }
  RoundRecord record;
  record.round = state.round_index;
  record.storyteller = state.storyteller;
  record.phrase = *state.round.phrase;
  record.table = state.round.table;
  record.votes = state.round.votes;
  record.points = state.round.score->points;
  record.storyteller_votes = state.round.score->storyteller_votes;
  record.scores = state.scores;
  for (std::size_t p = 0; p < record.scores.size(); ++p) {
    record.scores[p] += record.points[p];
  }
  return record;
}

EndRecord MakeEndRecord(const GameState& state) {
  if (state.phase != Phase::kGameOver) {
    Fail(ErrorCode::kWrongPhase, "end record needs a finished game");
  }
  return {state.round_index, state.scores, state.winners};
}

nlohmann::json HeaderToJson(const TranscriptHeader& header) {
  nlohmann::json deck = nlohmann::json::array();
  for (const Card& card : header.deck) deck.push_back(CardToJson(card));
  nlohmann::json seats = nlohmann::json::array();
  for (const SeatRecord& seat : header.seats) {
    nlohmann::json s = {{"kind", seat.kind}, {"slot", seat.slot}};
    if (!seat.agent.is_null()) s["agent"] = seat.agent;
    seats.push_back(std::move(s));
  }
  return {{"record", "header"},
          {"format", "dixit-transcript"},
          {"version", kTranscriptVersion},
          {"game_index", header.game_index},
          {"config", GameConfigToJson(header.config)},
          {"deck", std::move(deck)},
          {"seats", std::move(seats)}};
}

nlohmann::json EntryToJson(const TranscriptEntry& entry) {
  if (const auto* action = std::get_if<ActionRecord>(&entry)) {
    nlohmann::json out = {{"record", "action"},
                          {"kind", ActionKindName(action->kind)},
                          {"round", action->round},
                          {"player", action->player},
                          {"card", action->card}};
    if (action->phrase) out["phrase"] = action->phrase->Text();
    if (action->explanation) out["explanation"] = *action->explanation;
    return out;
  }
  const auto& round = std::get<RoundRecord>(entry);
  nlohmann::json table = nlohmann::json::array();
  for (const TableEntry& t : round.table) {
    table.push_back({{"card", t.card}, {"owner", t.owner}});
  }
  nlohmann::json votes = nlohmann::json::array();
  for (const auto& vote : round.votes) votes.push_back(OptionalId(vote));
  return {{"record", "round"},
          {"round", round.round},
          {"storyteller", round.storyteller},
          {"phrase", round.phrase.Text()},
          {"table", std::move(table)},
          {"votes", std::move(votes)},
          {"points", round.points},
          {"n_v", round.storyteller_votes},
          {"scores", round.scores}};
}

nlohmann::json EndToJson(const EndRecord& end) {
  return {{"record", "end"},
          {"rounds", end.rounds},
          {"scores", end.scores},
          {"winners", end.winners}};
}

void WriteTranscript(std::ostream& out, const Transcript& transcript) {
  out << HeaderToJson(transcript.header).dump() << '\n';
  for (const auto& entry : transcript.entries) {
    out << EntryToJson(entry).dump() << '\n';
  }
  if (transcript.end) out << EndToJson(*transcript.end).dump() << '\n';
}

void WriteTranscriptFile(const std::filesystem::path& path,
                         const Transcript& transcript) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIoError, "cannot write " + path.string());
  WriteTranscript(out, transcript);
}

Transcript ReadTranscript(std::istream& in, const std::string& source) {
  Transcript transcript;
  bool have_header = false;
  try {
    ForEachJsonLine(in, source, [&](const nlohmann::json& r, int) {
      const std::string kind = r.at("record").get<std::string>();
      if (kind == "header") {
        if (have_header) Fail(ErrorCode::kParseError, "second header");
        if (r.at("format") != "dixit-transcript" ||
            r.at("version") != kTranscriptVersion) {
          Fail(ErrorCode::kParseError, "unsupported transcript format");
        }
        have_header = true;
        TranscriptHeader& h = transcript.header;
        h.game_index = r.at("game_index").get<int>();
        h.config = GameConfigFromJson(r.at("config"));
        for (const auto& card : r.at("deck")) h.deck.push_back(CardFromJson(card));
        for (const auto& seat : r.at("seats")) {
          SeatRecord s;
          s.kind = seat.at("kind").get<std::string>();
          s.slot = seat.at("slot").get<int>();
          if (seat.contains("agent")) s.agent = seat["agent"];
          h.seats.push_back(std::move(s));
        }
        return;
      }
      if (!have_header) Fail(ErrorCode::kParseError, "missing header");
      if (transcript.end) Fail(ErrorCode::kParseError, "record after end");
      if (kind == "action") {
        transcript.entries.push_back(ActionFromJson(r));
      } else if (kind == "round") {
        transcript.entries.push_back(RoundFromJson(r));
      } else if (kind == "end") {
        transcript.end = EndRecord{r.at("rounds").get<int>(),
                                   r.at("scores").get<std::vector<int>>(),
                                   r.at("winners").get<std::vector<int>>()};
      } else {
        Fail(ErrorCode::kParseError, "unknown record '" + kind + "'");
      }
    });
  } catch (const DixitError& e) {
    throw DixitError(ErrorCode::kCorruptTranscript, e.detail());
  }
  if (!have_header) Fail(ErrorCode::kCorruptTranscript, source + ": empty");
  return transcript;
}

Transcript ReadTranscriptFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  return ReadTranscript(in, path.string());
}

}  // namespace dixit
