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

#ifndef DIXIT_SERVER_WS_SERVER_H_
#define DIXIT_SERVER_WS_SERVER_H_

#include <memory>
#include <vector>

#include "dixit/agents/lexicon.h"
#include "dixit/engine/card.h"
#include "dixit/server/server_config.h"

namespace dixit::server {

// Serves the wire protocol over websocket at path /ws, one JSON envelope per
// text frame, and static files from config.static_dir on every other GET.
class WsServer {
 public:
  WsServer(ServerConfig config, std::vector<Card> deck,
           std::shared_ptr<const agents::CandidateLexicon> lexicon);
  ~WsServer();

  // Binds and starts the worker threads; returns immediately.
  void Start();
  // The bound port, useful when the config asked for port 0.
  int port() const;
  // Blocks until Stop() is called from another thread.
  void Wait();
  void Stop();

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dixit::server

#endif  // DIXIT_SERVER_WS_SERVER_H_
