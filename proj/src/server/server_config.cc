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

#include "dixit/server/server_config.h"

#include <cstdlib>

#include "dixit/common/error.h"
#include "dixit/common/json_lines.h"

namespace dixit::server {

void ValidateServerConfig(const ServerConfig& config) {
  if (config.port < 0 || config.port > 65535) {
    Fail(ErrorCode::kInvalidConfig, "port out of range");
  }
  if (config.threads < 1) Fail(ErrorCode::kInvalidConfig, "threads must be >= 1");
  const SessionConfig& s = config.session;
  s.game.Validate();
  if (s.max_agent_seats < 0 || config.agent_seats < 0 ||
      config.agent_seats > s.max_agent_seats) {
    Fail(ErrorCode::kSeatCountInvalid,
         "agent_seats must lie in [0, max_agent_seats]");
  }
  if (config.agent_seats >= s.game.n_players) {
    Fail(ErrorCode::kSeatCountInvalid, "lobbies need at least one human seat");
  }
  if (s.move_timeout.count() <= 0 || s.agent_timeout.count() <= 0) {
    Fail(ErrorCode::kInvalidConfig, "timeouts must be positive");
  }
  if (!s.context.is_object()) {
    Fail(ErrorCode::kInvalidConfig, "context must be an object");
  }
}

ServerConfig ServerConfigFromJson(const nlohmann::json& record,
                                  const std::filesystem::path& base_dir) {
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  try {
    ServerConfig config;
    config.bind = record.value("bind", config.bind);
    config.port = record.value("port", config.port);
    config.threads = record.value("threads", config.threads);
    if (record.contains("static_dir")) {
      config.static_dir = resolve(record["static_dir"].get<std::string>());
    }
    config.deck_path = resolve(record.at("deck").get<std::string>());
    config.lexicon_path = resolve(record.at("lexicon").get<std::string>());
    if (record.contains("transcript_dir")) {
      config.transcript_dir =
          resolve(record["transcript_dir"].get<std::string>());
    }
    SessionConfig& s = config.session;
    s.game.n_players = record.value("players", s.game.n_players);
    s.game.phrase_limit = record.value("phrase_limit", s.game.phrase_limit);
    s.game.target_score = record.value("target_score", s.game.target_score);
    s.max_agent_seats = record.value("max_agent_seats", s.max_agent_seats);
    s.move_timeout = std::chrono::milliseconds(
        record.value("move_timeout_ms", s.move_timeout.count()));
    s.agent_timeout = std::chrono::milliseconds(
        record.value("agent_timeout_ms", s.agent_timeout.count()));
    if (record.contains("context")) s.context = record["context"];
    config.agent_seats = record.value("agent_seats", config.agent_seats);
    if (record.contains("agent")) {
      const auto& agent = record["agent"];
      config.agent = agent.is_string()
                         ? agents::LoadAgentSpec(resolve(agent.get<std::string>()))
                         : agents::AgentSpecFromJson(agent);
    }
    if (record.contains("seed")) {
      config.seed = record["seed"].get<std::uint64_t>();
    }
    ValidateServerConfig(config);
    return config;
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParseError, std::string("server config: ") + e.what());
  }
}

ServerConfig LoadServerConfig(const std::filesystem::path& path) {
  try {
    return ServerConfigFromJson(ReadJsonFile(path), path.parent_path());
  } catch (const DixitError& e) {
    if (e.detail().rfind(path.string(), 0) == 0) throw;
    throw DixitError(e.code(), path.string() + ": " + e.detail());
  }
}

std::filesystem::path ResolveServerConfigPath(
    const std::optional<std::filesystem::path>& cli_path) {
  if (cli_path) return *cli_path;
  if (const char* env = std::getenv(kConfigPathEnv); env && *env) return env;
  Fail(ErrorCode::kInvalidConfig,
       std::string("no --config given and ") + kConfigPathEnv + " is unset");
}

}  // namespace dixit::server
