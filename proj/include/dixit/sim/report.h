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

#ifndef DIXIT_SIM_REPORT_H_
#define DIXIT_SIM_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "dixit/engine/transcript.h"
#include "json.hpp"

namespace dixit::sim {

// Results for one tournament slot (one agent spec), whichever seat it
// occupied in each game.
struct SlotStats {
  int slot = 0;
  std::string name;
  int games = 0;
  int wins = 0;   // sole winner
  int draws = 0;  // shared first place
  // Wins plus 1/k for every k-way draw; sums to the game count over slots.
  double win_share = 0.0;
  double win_rate = 0.0;        // wins / games
  double win_share_rate = 0.0;  // win_share / games
  double mean_score = 0.0;
  double stddev_score = 0.0;  // sample standard deviation
  int storyteller_rounds = 0;
  int storyteller_successes = 0;  // rounds where the storyteller scored
  double storyteller_success_rate = 0.0;
  double mean_storyteller_votes = 0.0;  // mean n_V over its storyteller rounds
};

struct TournamentReport {
  int games = 0;
  int rounds = 0;
  std::vector<SlotStats> slots;
  double mean_storyteller_votes = 0.0;  // over every round of every game
};

// Pure fold over finished transcripts. Throws kCorruptTranscript for a
// transcript without an end record or with inconsistent seats.
TournamentReport BuildReport(std::span<const Transcript> transcripts);

nlohmann::json ReportToJson(const TournamentReport& report);

// Fixed-width table for terminals.
std::string FormatReportTable(const TournamentReport& report);

}  // namespace dixit::sim

#endif  // DIXIT_SIM_REPORT_H_
