// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace robojs::net {

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;

  std::string str() const { return host + ":" + std::to_string(port); }
  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;
};

struct Datagram {
  Endpoint from;
  std::string data;
};

/// Unreliable datagram socket. send() may be called from any thread;
/// receive() from one thread at a time.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual bool send(const Endpoint& to, std::string_view data) = 0;
  /// Waits up to `timeout` seconds.
  virtual std::optional<Datagram> receive(double timeout) = 0;
  virtual Endpoint local_endpoint() const = 0;
};

/// IPv4 UDP socket. Port 0 picks a free port.
class UdpTransport : public Transport {
 public:
  explicit UdpTransport(std::uint16_t port = 0, const std::string& bind_host = "0.0.0.0");
  ~UdpTransport() override;

  UdpTransport(const UdpTransport&) = delete;
  UdpTransport& operator=(const UdpTransport&) = delete;

  bool send(const Endpoint& to, std::string_view data) override;
  std::optional<Datagram> receive(double timeout) override;
  Endpoint local_endpoint() const override;

 private:
  int fd_ = -1;
  Endpoint local_;
};

/// Drops datagrams in both directions with fixed probabilities, for
/// testing. Deterministic for a given seed and call sequence.
class LossyTransport : public Transport {
 public:
  LossyTransport(Transport& inner, double send_loss, double receive_loss, std::uint32_t seed);

  bool send(const Endpoint& to, std::string_view data) override;
  std::optional<Datagram> receive(double timeout) override;
  Endpoint local_endpoint() const override { return inner_.local_endpoint(); }

  std::uint64_t dropped() const { return dropped_; }

 private:
  bool drop(double p);

  Transport& inner_;
  double send_loss_;
  double receive_loss_;
  std::mutex rng_mutex_;
  std::mt19937 rng_;
  std::atomic<std::uint64_t> dropped_{0};
};

/// Default ports, overridable by ROBOJS_HOST, ROBOJS_COMMAND_PORT,
/// ROBOJS_STATE_PORT and ROBOJS_BRIDGE_PORT.
struct Ports {
  std::string host = "127.0.0.1";
  std::uint16_t command = 17001;
  std::uint16_t state = 17002;
  std::uint16_t bridge = 17080;

  static Ports from_environment();
};

/// Wall-clock seconds on a monotonic clock.
double monotonic_seconds();

}  // namespace robojs::net
