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

// Command line front end: run tournaments, verify transcripts, host games.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dixit/agents/lexicon.h"
#include "dixit/common/error.h"
#include "dixit/engine/card.h"
#include "dixit/sim/replay.h"
#include "dixit/sim/report.h"
#include "dixit/sim/tournament.h"
#include "dixit/server/server_config.h"
#include "dixit/server/ws_server.h"

namespace {

std::atomic<bool> g_stop{false};

void HandleSignal(int) { g_stop = true; }

int Simulate(const std::string& config_path, std::optional<int> games,
             std::optional<std::uint64_t> seed, const std::string& out_dir) {
  dixit::sim::TournamentConfig config =
      dixit::sim::LoadTournamentConfig(config_path);
  if (games) config.games = *games;
  if (seed) config.master_seed = *seed;
  dixit::sim::TournamentReport report =
      dixit::sim::RunTournament(config, out_dir);
  std::cout << dixit::sim::FormatReportTable(report);
  return 0;
}

int ReplayCommand(const std::string& path) {
  dixit::GameState state = dixit::sim::Replay(path);
  std::cout << "ok: " << state.round_index << " rounds replayed, scores";
  for (int s : state.scores) std::cout << ' ' << s;
  std::cout << ", winners";
  for (int w : state.winners) std::cout << ' ' << w;
  std::cout << '\n';
  return 0;
}

int Serve(const std::optional<std::string>& config_path,
          std::optional<int> port) {
  std::optional<std::filesystem::path> cli;
  if (config_path) cli = *config_path;
  dixit::server::ServerConfig config = dixit::server::LoadServerConfig(
      dixit::server::ResolveServerConfigPath(cli));
  if (port) config.port = *port;
  std::vector<dixit::Card> deck = dixit::LoadDeck(config.deck_path);
  auto lexicon = std::make_shared<const dixit::agents::CandidateLexicon>(
      dixit::agents::LoadLexicon(config.lexicon_path,
                                 config.session.game.phrase_limit));
  const std::string bind = config.bind;
  dixit::server::WsServer server(std::move(config), std::move(deck),
                                 std::move(lexicon));
  server.Start();
  std::cout << "listening on " << bind << ':' << server.port()
            << " (websocket path /ws)" << std::endl;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.Stop();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dixit engine, agents, simulator and game server"};
  app.require_subcommand(1);

  std::string sim_config, sim_out;
  std::optional<int> sim_games;
  std::optional<std::uint64_t> sim_seed;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Play a seeded agent tournament and write transcripts");
  simulate->add_option("--config", sim_config, "Tournament config (JSON)")
      ->required();
  simulate->add_option("--games", sim_games, "Override the number of games")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed, "Override the master seed");
  simulate->add_option("--out", sim_out, "Output directory")->required();

  std::string replay_path;
  CLI::App* replay =
      app.add_subcommand("replay", "Re-execute a transcript and verify it");
  replay->add_option("transcript", replay_path, "Transcript file (JSONL)")
      ->required();

  std::optional<std::string> serve_config;
  std::optional<int> serve_port;
  CLI::App* serve = app.add_subcommand(
      "serve", "Host live games over websocket (config from --config or " +
                   std::string(dixit::server::kConfigPathEnv) + ")");
  serve->add_option("--config", serve_config, "Server config (JSON)");
  serve->add_option("--port", serve_port, "Override the listening port");

  CLI11_PARSE(app, argc, argv);
  try {
    if (simulate->parsed()) {
      return Simulate(sim_config, sim_games, sim_seed, sim_out);
    }
    if (replay->parsed()) return ReplayCommand(replay_path);
    if (serve->parsed()) return Serve(serve_config, serve_port);
  } catch (const dixit::DixitError& e) {
    std::cerr << "dixit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dixit: unexpected failure: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
