/*
 * Copyright 2026 The evpnsdn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EVPNSDN_UTIL_SOCKET_HPP
#define EVPNSDN_UTIL_SOCKET_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evpnsdn {

/// Thin RAII wrapper around an IPv4 TCP socket. Blocking I/O with
/// poll-based timeouts; moves transfer ownership of the descriptor.
class TcpSocket {
 public:
  TcpSocket() = default;
  explicit TcpSocket(int fd) : fd_(fd) {}
  TcpSocket(TcpSocket&& other) noexcept;
  TcpSocket& operator=(TcpSocket&& other) noexcept;
  TcpSocket(const TcpSocket&) = delete;
  TcpSocket& operator=(const TcpSocket&) = delete;
  ~TcpSocket();

  static std::optional<TcpSocket> connect(const std::string& host, uint16_t port,
                                          std::chrono::milliseconds timeout);

  bool valid() const { return fd_ >= 0; }
  int fd() const { return fd_; }

  /// Writes the whole buffer; short writes are retried. Returns false on
  /// error or peer close.
  bool send_all(const uint8_t* data, size_t len);
  bool send_all(const std::string& data);

  /// Reads up to len bytes, waiting at most `timeout`. Returns number of
  /// bytes read, 0 on orderly close, -1 on error, -2 on timeout.
  ssize_t recv_some(uint8_t* buf, size_t len, std::chrono::milliseconds timeout);

  /// Reads exactly len bytes or fails. Returns false on close/error/timeout.
  bool recv_exact(uint8_t* buf, size_t len, std::chrono::milliseconds timeout);

  void set_nodelay();
  void shutdown_both();
  void close();

 private:
  int fd_ = -1;
};

/// Listening socket; port 0 binds an ephemeral port (see bound_port()).
class TcpListener {
 public:
  TcpListener() = default;
  TcpListener(TcpListener&& other) noexcept;
  TcpListener& operator=(TcpListener&& other) noexcept;
  TcpListener(const TcpListener&) = delete;
  ~TcpListener();

  static std::optional<TcpListener> bind(const std::string& host, uint16_t port);

  uint16_t bound_port() const { return port_; }
  bool valid() const { return fd_ >= 0; }

  /// Accepts one connection; returns nullopt on timeout or if closed.
  std::optional<TcpSocket> accept(std::chrono::milliseconds timeout);

  void close();

 private:
  int fd_ = -1;
  uint16_t port_ = 0;
};

}  // namespace evpnsdn

#endif  // EVPNSDN_UTIL_SOCKET_HPP
