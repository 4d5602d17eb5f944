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

#include "dixit/server/ws_server.h"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "dixit/common/error.h"
#include "dixit/server/hub.h"

namespace dixit::server {

namespace {

namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;

constexpr auto kTickInterval = std::chrono::milliseconds(100);

std::string_view MimeType(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html";
  if (ext == ".js" || ext == ".mjs") return "application/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".png") return "image/png";
  if (ext == ".jpg" || ext == ".jpeg") return "image/jpeg";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".ico") return "image/x-icon";
  if (ext == ".wasm") return "application/wasm";
  return "application/octet-stream";
}

// Maps a request target onto a file under `root`, or nullopt when the target
// escapes the root or names nothing.
std::optional<std::filesystem::path> ResolveStatic(
    const std::filesystem::path& root, std::string_view target) {
  if (root.empty()) return std::nullopt;
  target = target.substr(0, target.find_first_of("?#"));
  std::filesystem::path relative =
      std::filesystem::path(std::string(target)).relative_path();
  for (const auto& part : relative) {
    if (part == "..") return std::nullopt;
  }
  std::filesystem::path path = root / relative;
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) path /= "index.html";
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  return path;
}

}  // namespace

class WsServer::Impl {
 public:
  class Connection;

  Impl(ServerConfig config, std::vector<Card> deck,
       std::shared_ptr<const agents::CandidateLexicon> lexicon)
      : static_dir_(config.static_dir),
        bind_(config.bind),
        requested_port_(config.port),
        threads_(config.threads),
        hub_(std::move(config), std::move(deck), std::move(lexicon),
             [this](Hub::ConnectionId id, const std::string& frame) {
               Deliver(id, frame);
             }),
        acceptor_(ioc_),
        timer_(ioc_) {}

  void Start() {
    tcp::endpoint endpoint(net::ip::make_address(bind_),
                           static_cast<unsigned short>(requested_port_));
    acceptor_.open(endpoint.protocol());
    acceptor_.set_option(net::socket_base::reuse_address(true));
    acceptor_.bind(endpoint);
    acceptor_.listen(net::socket_base::max_listen_connections);
    port_ = acceptor_.local_endpoint().port();
    Accept();
    ScheduleTick();
    for (int i = 0; i < threads_; ++i) {
      workers_.emplace_back([this] { ioc_.run(); });
    }
  }

  void Stop() {
    {
      std::lock_guard lock(stop_mu_);
      if (stopped_) return;
      stopped_ = true;
    }
    ioc_.stop();
    for (std::thread& t : workers_) t.join();
    workers_.clear();
    stop_cv_.notify_all();
  }

  void Wait() {
    std::unique_lock lock(stop_mu_);
    stop_cv_.wait(lock, [this] { return stopped_; });
  }

  int port() const { return port_; }

  Hub& hub() { return hub_; }

  void Register(Hub::ConnectionId id, std::shared_ptr<Connection> c) {
    std::lock_guard lock(connections_mu_);
    connections_[id] = std::move(c);
  }
  void Unregister(Hub::ConnectionId id) {
    std::lock_guard lock(connections_mu_);
    connections_.erase(id);
  }
  Hub::ConnectionId NextId() { return ++next_id_; }

  const std::filesystem::path& static_dir() const { return static_dir_; }

 private:
  void Deliver(Hub::ConnectionId id, const std::string& frame);
  void Accept();
  void ScheduleTick() {
    timer_.expires_after(kTickInterval);
    timer_.async_wait([this](beast::error_code ec) {
      if (ec) return;
      try {
        hub_.Tick(Clock::now());
      } catch (const std::exception& e) {
        std::cerr << "tick: " << e.what() << '\n';
      }
      ScheduleTick();
    });
  }

  std::filesystem::path static_dir_;
  std::string bind_;
  int requested_port_;
  int threads_;
  int port_ = 0;
  Hub hub_;
  net::io_context ioc_;
  tcp::acceptor acceptor_;
  net::steady_timer timer_;
  std::vector<std::thread> workers_;
  std::mutex connections_mu_;
  std::map<Hub::ConnectionId, std::shared_ptr<Connection>> connections_;
  std::atomic<Hub::ConnectionId> next_id_{0};
  std::mutex stop_mu_;
  std::condition_variable stop_cv_;
  bool stopped_ = false;
};

// One websocket client. All stream operations run on the socket's strand;
// frames from other threads are posted onto it.
class WsServer::Impl::Connection
    : public std::enable_shared_from_this<Connection> {
 public:
  Connection(Impl& server, tcp::socket socket)
      : server_(server), ws_(std::move(socket)), id_(server.NextId()) {}

  void Run(http::request<http::string_body> request) {
    ws_.set_option(
        websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(request, [self = shared_from_this()](beast::error_code ec) {
      if (ec) return;
      self->server_.Register(self->id_, self);
      self->server_.hub().OnConnect(self->id_);
      self->Read();
    });
  }

  void Send(std::string frame) {
    net::post(ws_.get_executor(),
              [self = shared_from_this(), frame = std::move(frame)]() mutable {
                self->queue_.push_back(std::move(frame));
                if (self->queue_.size() == 1) self->Write();
              });
  }

 private:
  void Read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec,
                                                        std::size_t) {
      if (ec) {
        self->server_.hub().OnDisconnect(self->id_);
        self->server_.Unregister(self->id_);
        return;
      }
      const std::string frame = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      try {
        self->server_.hub().OnMessage(self->id_, frame, Clock::now());
      } catch (const std::exception& e) {
        std::cerr << "connection " << self->id_ << ": " << e.what() << '\n';
      }
      self->Read();
    });
  }

  void Write() {
    ws_.text(true);
    ws_.async_write(net::buffer(queue_.front()),
                    [self = shared_from_this()](beast::error_code ec,
                                                std::size_t) {
                      if (ec) {
                        self->queue_.clear();
                        return;
                      }
                      self->queue_.pop_front();
                      if (!self->queue_.empty()) self->Write();
                    });
  }

  Impl& server_;
  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
  Hub::ConnectionId id_;
};

namespace {

// Reads one HTTP request; upgrades /ws to a websocket, otherwise serves a
// static file and closes.
class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  using Upgrade =
      std::function<void(tcp::socket, http::request<http::string_body>)>;

  HttpSession(tcp::socket socket, std::filesystem::path root, Upgrade upgrade)
      : stream_(std::move(socket)),
        root_(std::move(root)),
        upgrade_(std::move(upgrade)) {}

  void Run() {
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, request_,
                     [self = shared_from_this()](beast::error_code ec,
                                                 std::size_t) {
                       if (!ec) self->OnRequest();
                     });
  }

 private:
  void OnRequest() {
    if (websocket::is_upgrade(request_)) {
      if (request_.target() == "/ws") {
        stream_.expires_never();
        upgrade_(stream_.release_socket(), std::move(request_));
        return;
      }
      Respond(http::status::not_found, "text/plain", "no such endpoint\n");
      return;
    }
    if (request_.method() != http::verb::get &&
        request_.method() != http::verb::head) {
      Respond(http::status::method_not_allowed, "text/plain", "GET only\n");
      return;
    }
    std::optional<std::filesystem::path> path =
        ResolveStatic(root_, std::string_view(request_.target().data(),
                                              request_.target().size()));
    if (!path) {
      Respond(http::status::not_found, "text/plain", "not found\n");
      return;
    }
    std::ifstream in(*path, std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    Respond(http::status::ok, MimeType(*path), body.str());
  }

  void Respond(http::status status, std::string_view mime, std::string body) {
    auto response = std::make_shared<http::response<http::string_body>>(
        status, request_.version());
    response->set(http::field::server, "dixit-server");
    response->set(http::field::content_type,
                  beast::string_view(mime.data(), mime.size()));
    response->keep_alive(false);
    if (request_.method() != http::verb::head) response->body() = std::move(body);
    response->prepare_payload();
    http::async_write(stream_, *response,
                      [self = shared_from_this(), response](
                          beast::error_code, std::size_t) {
                        beast::error_code ignored;
                        self->stream_.socket().shutdown(
                            tcp::socket::shutdown_send, ignored);
                      });
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> request_;
  std::filesystem::path root_;
  Upgrade upgrade_;
};

}  // namespace

void WsServer::Impl::Deliver(Hub::ConnectionId id, const std::string& frame) {
  std::shared_ptr<Connection> connection;
  {
    std::lock_guard lock(connections_mu_);
    auto it = connections_.find(id);
    if (it == connections_.end()) return;
    connection = it->second;
  }
  connection->Send(frame);
}

void WsServer::Impl::Accept() {
  acceptor_.async_accept(
      net::make_strand(ioc_), [this](beast::error_code ec, tcp::socket socket) {
        if (ec) {
          if (ec == net::error::operation_aborted) return;
        } else {
          std::make_shared<HttpSession>(
              std::move(socket), static_dir_,
              [this](tcp::socket s, http::request<http::string_body> request) {
                std::make_shared<Connection>(*this, std::move(s))
                    ->Run(std::move(request));
              })
              ->Run();
        }
        Accept();
      });
}

WsServer::WsServer(ServerConfig config, std::vector<Card> deck,
                   std::shared_ptr<const agents::CandidateLexicon> lexicon)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(deck),
                                   std::move(lexicon))) {}

WsServer::~WsServer() { impl_->Stop(); }

void WsServer::Start() {
  try {
    impl_->Start();
  } catch (const boost::system::system_error& e) {
    Fail(ErrorCode::kIoError, std::string("cannot listen: ") + e.what());
  }
}

int WsServer::port() const { return impl_->port(); }
void WsServer::Wait() { impl_->Wait(); }
void WsServer::Stop() { impl_->Stop(); }

}  // namespace dixit::server
