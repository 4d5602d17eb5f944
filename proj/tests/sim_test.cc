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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "dixit/common/error.h"
#include "dixit/engine/transcript.h"
#include "dixit/sim/replay.h"
#include "dixit/sim/report.h"
#include "dixit/sim/tournament.h"
#include "sim_util.h"

namespace dixit::sim {
namespace {

using agents::StoryPolicy;
using testing::FastSpec;

std::vector<agents::AgentSpec> MixedSpecs() {
  return {FastSpec(StoryPolicy::kStrategy1, 60, 1),
          FastSpec(StoryPolicy::kStrategy2, 60, 2),
          FastSpec(StoryPolicy::kRandomPhrase, 60, 3),
          FastSpec(StoryPolicy::kStrategy1, 60, 4)};
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const DixitError& e) {
    return e.code();
  }
  FAIL("expected a DixitError");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("every transcript replays to its recorded scoreboard") {
  const auto dir = testing::ScratchDir("sim_replay");
  TournamentConfig config = testing::SampleTournament(MixedSpecs(), 6, 77);
  RunTournament(config, dir);
  for (int g = 0; g < 6; ++g) {
    const auto path = dir / TranscriptFileName(g);
    Transcript t = ReadTranscriptFile(path);
    GameState state = Replay(path);
    CHECK(state.phase == Phase::kGameOver);
    CHECK(state.scores == t.end->scores);
    CHECK(state.winners == t.end->winners);
  }
}

TEST_CASE("transcripts from a different master seed replay as well") {
  const auto dir = testing::ScratchDir("sim_foreign");
  RunTournament(testing::SampleTournament(MixedSpecs(), 2, 123456789), dir);
  Transcript t = ReadTranscriptFile(dir / TranscriptFileName(1));
  CHECK(ReplayTranscript(t).scores == t.end->scores);
}

TEST_CASE("damaged transcripts are rejected") {
  const auto dir = testing::ScratchDir("sim_corrupt");
  RunTournament(testing::SampleTournament(MixedSpecs(), 1, 5), dir);
  const std::string text = testing::Slurp(dir / TranscriptFileName(0));

  SUBCASE("truncated") {
    const auto path = dir / "truncated.jsonl";
    std::ofstream(path, std::ios::binary) << text.substr(0, text.size() / 2);
    CHECK(CodeOf([&] { Replay(path); }) == ErrorCode::kCorruptTranscript);
  }
  SUBCASE("missing end record") {
    const auto path = dir / "no_end.jsonl";
    std::string cut = text.substr(0, text.rfind("{\"record\":\"end\""));
    if (cut.size() == text.size()) cut = text.substr(0, text.rfind('{'));
    std::ofstream(path, std::ios::binary) << cut;
    CHECK(CodeOf([&] { Replay(path); }) == ErrorCode::kCorruptTranscript);
  }
  SUBCASE("tampered round result") {
    Transcript t = ReadTranscriptFile(dir / TranscriptFileName(0));
    for (TranscriptEntry& entry : t.entries) {
      if (auto* round = std::get_if<RoundRecord>(&entry)) {
        round->points[0] += 1;
        break;
      }
    }
    CHECK(CodeOf([&] { ReplayTranscript(t); }) == ErrorCode::kCorruptTranscript);
  }
  SUBCASE("an illegal recorded action") {
    Transcript t = ReadTranscriptFile(dir / TranscriptFileName(0));
    for (TranscriptEntry& entry : t.entries) {
      if (auto* action = std::get_if<ActionRecord>(&entry)) {
        action->card = "no-such-card";
        break;
      }
    }
    CHECK(CodeOf([&] { ReplayTranscript(t); }) == ErrorCode::kCorruptTranscript);
  }
  SUBCASE("missing file") {
    CHECK(CodeOf([&] { Replay(dir / "absent.jsonl"); }) == ErrorCode::kIoError);
  }
}

TEST_CASE("transcripts round-trip through JSON lines") {
  TournamentConfig config = testing::SampleTournament(MixedSpecs(), 1, 8);
  auto deck = LoadDeck(config.deck_path);
  auto lexicon = std::make_shared<const agents::CandidateLexicon>(
      agents::LoadLexicon(config.lexicon_path, 4));
  Transcript t = PlayGame(config, PlanGame(config, 0), deck, lexicon);
  std::stringstream a, b;
  WriteTranscript(a, t);
  Transcript back = ReadTranscript(a, "mem");
  WriteTranscript(b, back);
  CHECK(a.str() == b.str());
  for (const TranscriptEntry& entry : t.entries) {
    if (const auto* action = std::get_if<ActionRecord>(&entry)) {
      REQUIRE(action->explanation.has_value());
      CHECK(agents::IsPopulatedExplanation(*action->explanation));
    }
  }
}

TEST_CASE("a single game yields a report over exactly one transcript") {
  const auto dir = testing::ScratchDir("sim_one");
  TournamentReport report =
      RunTournament(testing::SampleTournament(MixedSpecs(), 1, 3), dir);
  CHECK(report.games == 1);
  int games = 0;
  double shares = 0.0;
  for (const SlotStats& s : report.slots) {
    games += s.games;
    shares += s.win_share;
  }
  CHECK(games == 4);
  CHECK(shares == doctest::Approx(1.0));
  CHECK(std::filesystem::exists(dir / "report.txt"));
  CHECK(std::filesystem::exists(dir / TranscriptFileName(0)));
  CHECK_FALSE(std::filesystem::exists(dir / TranscriptFileName(1)));
}

TEST_CASE("the report is a pure fold over the written transcripts") {
  const auto dir = testing::ScratchDir("sim_fold");
  RunTournament(testing::SampleTournament(MixedSpecs(), 5, 31), dir);
  std::vector<Transcript> transcripts;
  for (int g = 0; g < 5; ++g) {
    transcripts.push_back(ReadTranscriptFile(dir / TranscriptFileName(g)));
  }
  const nlohmann::json refolded = ReportToJson(BuildReport(transcripts));
  CHECK(refolded == nlohmann::json::parse(testing::Slurp(dir / "report.json")));

  // Hand count from the same files.
  const TournamentReport report = BuildReport(transcripts);
  int rounds = 0;
  for (const Transcript& t : transcripts) rounds += t.end->rounds;
  CHECK(report.rounds == rounds);
}

TEST_CASE("identical configs give byte-identical output") {
  TournamentConfig config = testing::SampleTournament(MixedSpecs(), 3, 99);
  const auto a = testing::ScratchDir("sim_det_a");
  const auto b = testing::ScratchDir("sim_det_b");
  RunTournament(config, a);
  RunTournament(config, b);
  CHECK(testing::DirectoryBytes(a) == testing::DirectoryBytes(b));
  config.master_seed = 100;
  const auto c = testing::ScratchDir("sim_det_c");
  RunTournament(config, c);
  CHECK(testing::DirectoryBytes(a) != testing::DirectoryBytes(c));
}

TEST_CASE("seats rotate so each slot opens as storyteller equally often") {
  TournamentConfig config = testing::SampleTournament(MixedSpecs(), 8, 4);
  std::vector<int> opens(4, 0);
  for (int g = 0; g < 8; ++g) {
    GamePlan plan = PlanGame(config, g);
    ++opens[plan.seat_slot[0]];
    std::vector<int> sorted = plan.seat_slot;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3});
  }
  CHECK(opens == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("tournament config files") {
  TournamentConfig config = LoadTournamentConfig(testing::DataPath("tournament.json"));
  CHECK(config.agents.size() == 4);
  CHECK(config.games == 20);
  const auto dir = testing::ScratchDir("sim_config");
  std::ofstream(dir / "bad.json") << "{\"deck\": \"x.jsonl\", \"lexicon\": 3}";
  CHECK(CodeOf([&] { LoadTournamentConfig(dir / "bad.json"); }) ==
        ErrorCode::kParseError);
  TournamentConfig short_handed = config;
  short_handed.agents.pop_back();
  CHECK(CodeOf([&] { short_handed.Validate(); }) == ErrorCode::kInvalidConfig);

  std::ofstream(dir / "deck.jsonl") << "{\"id\": \"a\"}\n{\"id\": \n";
  TournamentConfig broken = config;
  broken.deck_path = dir / "deck.jsonl";
  try {
    RunTournament(broken, dir / "out");
    FAIL("expected a parse error");
  } catch (const DixitError& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("deck.jsonl:2") != std::string::npos);
  }
}

TEST_CASE("strategy 1 storytellers succeed more often than random phrases") {
  // Directional sanity check over 500 games with a shared tag model.
  std::vector<agents::AgentSpec> specs = {
      FastSpec(StoryPolicy::kStrategy1, 40, 1),
      FastSpec(StoryPolicy::kRandomPhrase, 40, 2),
      FastSpec(StoryPolicy::kStrategy1, 40, 3),
      FastSpec(StoryPolicy::kRandomPhrase, 40, 4)};
  // Jaccard scores live in [0, 1]; at temperature 1 the voter model is
  // nearly uniform and stops telling clear clues from obscure ones.
  for (auto& spec : specs) {
    spec.settings.candidate_limit = 3;
    spec.settings.temperature = 0.1;
  }
  TournamentConfig config = testing::SampleTournament(specs, 500, 2024);
  auto deck = LoadDeck(config.deck_path);
  auto lexicon = std::make_shared<const agents::CandidateLexicon>(
      agents::LoadLexicon(config.lexicon_path, 4));
  TournamentReport report = BuildReport(PlayTournament(config, deck, lexicon));
  const auto& s = report.slots;
  MESSAGE("storyteller success: strategy1 " << s[0].storyteller_success_rate
          << "/" << s[2].storyteller_success_rate << ", random "
          << s[1].storyteller_success_rate << "/" << s[3].storyteller_success_rate);
  const double strategy = s[0].storyteller_successes + s[2].storyteller_successes;
  const double strategy_rounds = s[0].storyteller_rounds + s[2].storyteller_rounds;
  const double random = s[1].storyteller_successes + s[3].storyteller_successes;
  const double random_rounds = s[1].storyteller_rounds + s[3].storyteller_rounds;
  CHECK(strategy / strategy_rounds > random / random_rounds);
}

}  // namespace
}  // namespace dixit::sim
