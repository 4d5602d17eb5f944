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

#ifndef DIXIT_SERVER_SERVER_CONFIG_H_
#define DIXIT_SERVER_SERVER_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "dixit/agents/agent.h"
#include "dixit/server/session.h"
#include "json.hpp"

namespace dixit::server {

// Server config file. Relative paths resolve against the file's directory.
//   {"bind": "127.0.0.1", "port": 8080, "threads": 2,
//    "static_dir": "../webui/dist", "deck": "deck84.jsonl",
//    "lexicon": "lexicon.jsonl", "transcript_dir": "sessions",
//    "players": 4, "agent_seats": 1, "max_agent_seats": 1,
//    "move_timeout_ms": 120000, "agent_timeout_ms": 20000,
//    "phrase_limit": 4, "target_score": 30,
//    "context": {"language": "en", "culture": "...", "audience": "..."},
//    "agent": {...agent spec...} | "agents/strategy1.json",
//    "seed": 42}
// Without "seed" every game is dealt from a fresh random seed.
struct ServerConfig {
  std::string bind = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  int threads = 2;
  std::filesystem::path static_dir;
  std::filesystem::path deck_path;
  std::filesystem::path lexicon_path;
  std::filesystem::path transcript_dir;  // empty: do not persist
  SessionConfig session;
  int agent_seats = 1;  // agents seated in every new lobby
  agents::AgentSpec agent;
  std::optional<std::uint64_t> seed;
};

void ValidateServerConfig(const ServerConfig& config);
ServerConfig ServerConfigFromJson(const nlohmann::json& record,
                                  const std::filesystem::path& base_dir);
ServerConfig LoadServerConfig(const std::filesystem::path& path);

// The only environment variable the server reads.
inline constexpr char kConfigPathEnv[] = "DIXIT_SERVER_CONFIG";

// `cli_path` when given, otherwise $DIXIT_SERVER_CONFIG. Throws
// kInvalidConfig when neither is set.
std::filesystem::path ResolveServerConfigPath(
    const std::optional<std::filesystem::path>& cli_path);

}  // namespace dixit::server

#endif  // DIXIT_SERVER_SERVER_CONFIG_H_
