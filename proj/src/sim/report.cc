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

#include "dixit/sim/report.h"

#include <cmath>
#include <cstdio>

#include "dixit/common/error.h"

namespace dixit::sim {

TournamentReport BuildReport(std::span<const Transcript> transcripts) {
  TournamentReport report;
  std::vector<std::vector<int>> final_scores;
  std::vector<double> votes_total;
  double all_votes = 0.0;

  for (const Transcript& t : transcripts) {
    if (!t.end) Fail(ErrorCode::kCorruptTranscript, "transcript has no end");
    const auto& seats = t.header.seats;
    if (seats.size() != static_cast<std::size_t>(t.header.config.n_players)) {
      Fail(ErrorCode::kCorruptTranscript, "seat list does not match players");
    }
    if (report.slots.empty()) {
      report.slots.resize(seats.size());
      final_scores.resize(seats.size());
      votes_total.assign(seats.size(), 0.0);
      for (std::size_t s = 0; s < seats.size(); ++s) report.slots[s].slot = s;
    }
    if (seats.size() != report.slots.size()) {
      Fail(ErrorCode::kCorruptTranscript, "games with different seat counts");
    }
    std::vector<int> slot_of_seat(seats.size());
    for (std::size_t seat = 0; seat < seats.size(); ++seat) {
      const int slot = seats[seat].slot;
      if (slot < 0 || slot >= static_cast<int>(seats.size())) {
        Fail(ErrorCode::kCorruptTranscript, "bad slot index");
      }
      slot_of_seat[seat] = slot;
      SlotStats& stats = report.slots[slot];
      if (stats.name.empty() && seats[seat].agent.is_object()) {
        stats.name = seats[seat].agent.value("name", "");
      }
      ++stats.games;
      final_scores[slot].push_back(t.end->scores.at(seat));
    }

    const auto& winners = t.end->winners;
    for (int seat : winners) {
      SlotStats& stats = report.slots[slot_of_seat.at(seat)];
      if (winners.size() == 1) {
        ++stats.wins;
      } else {
        ++stats.draws;
      }
      stats.win_share += 1.0 / winners.size();
    }

    for (const TranscriptEntry& entry : t.entries) {
      const auto* round = std::get_if<RoundRecord>(&entry);
      if (round == nullptr) continue;
      const int slot = slot_of_seat.at(round->storyteller);
      SlotStats& stats = report.slots[slot];
      ++stats.storyteller_rounds;
      if (round->points.at(round->storyteller) > 0) ++stats.storyteller_successes;
      votes_total[slot] += round->storyteller_votes;
      all_votes += round->storyteller_votes;
      ++report.rounds;
    }
    ++report.games;
  }

  for (std::size_t s = 0; s < report.slots.size(); ++s) {
    SlotStats& stats = report.slots[s];
    if (stats.games > 0) {
      stats.win_rate = static_cast<double>(stats.wins) / stats.games;
      stats.win_share_rate = stats.win_share / stats.games;
      double sum = 0.0;
      for (int score : final_scores[s]) sum += score;
      stats.mean_score = sum / stats.games;
      if (stats.games > 1) {
        double sq = 0.0;
        for (int score : final_scores[s]) {
          sq += (score - stats.mean_score) * (score - stats.mean_score);
        }
        stats.stddev_score = std::sqrt(sq / (stats.games - 1));
      }
    }
    if (stats.storyteller_rounds > 0) {
      stats.storyteller_success_rate =
          static_cast<double>(stats.storyteller_successes) /
          stats.storyteller_rounds;
      stats.mean_storyteller_votes = votes_total[s] / stats.storyteller_rounds;
    }
  }
  if (report.rounds > 0) report.mean_storyteller_votes = all_votes / report.rounds;
  return report;
}

nlohmann::json ReportToJson(const TournamentReport& report) {
  nlohmann::json slots = nlohmann::json::array();
  for (const SlotStats& s : report.slots) {
    slots.push_back({{"slot", s.slot},
                     {"name", s.name},
                     {"games", s.games},
                     {"wins", s.wins},
                     {"draws", s.draws},
                     {"win_share", s.win_share},
                     {"win_rate", s.win_rate},
                     {"win_share_rate", s.win_share_rate},
                     {"mean_score", s.mean_score},
                     {"stddev_score", s.stddev_score},
                     {"storyteller_rounds", s.storyteller_rounds},
                     {"storyteller_successes", s.storyteller_successes},
                     {"storyteller_success_rate", s.storyteller_success_rate},
                     {"mean_storyteller_votes", s.mean_storyteller_votes}});
  }
  return {{"games", report.games},
          {"rounds", report.rounds},
          {"mean_storyteller_votes", report.mean_storyteller_votes},
          {"slots", std::move(slots)}};
}

std::string FormatReportTable(const TournamentReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%d games, %d rounds, mean n_V %.3f\n",
                report.games, report.rounds, report.mean_storyteller_votes);
  out += line;
  std::snprintf(line, sizeof(line),
                "%-4s %-20s %6s %6s %8s %8s %8s %8s %8s\n", "slot", "name",
                "wins", "draws", "share", "mean", "stddev", "st.succ",
                "st.n_V");
  out += line;
  for (const SlotStats& s : report.slots) {
    std::snprintf(line, sizeof(line),
                  "%-4d %-20.20s %6d %6d %8.3f %8.2f %8.2f %8.3f %8.3f\n",
                  s.slot, s.name.c_str(), s.wins, s.draws, s.win_share_rate,
                  s.mean_score, s.stddev_score, s.storyteller_success_rate,
                  s.mean_storyteller_votes);
    out += line;
  }
  return out;
}

}  // namespace dixit::sim
