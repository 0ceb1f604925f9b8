// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/transport.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace robojs::net {

namespace {

sockaddr_in resolve(const Endpoint& e) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(e.port);
  if (inet_pton(AF_INET, e.host.c_str(), &addr.sin_addr) == 1) return addr;
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_DGRAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(e.host.c_str(), nullptr, &hints, &res) != 0 || !res) {
    throw std::runtime_error("cannot resolve host " + e.host);
  }
  addr.sin_addr = reinterpret_cast<sockaddr_in*>(res->ai_addr)->sin_addr;
  freeaddrinfo(res);
  return addr;
}

Endpoint endpoint_of(const sockaddr_in& addr) {
  char buf[INET_ADDRSTRLEN] = {};
  inet_ntop(AF_INET, &addr.sin_addr, buf, sizeof buf);
  return {buf, ntohs(addr.sin_port)};
}

std::uint16_t env_port(const char* name, std::uint16_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long p = std::strtol(v, &end, 10);
  if (*end != '\0' || p <= 0 || p > 65535) {
    throw std::runtime_error(std::string(name) + " is not a port number");
  }
  return static_cast<std::uint16_t>(p);
}

}  // namespace

UdpTransport::UdpTransport(std::uint16_t port, const std::string& bind_host) {
  fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
  if (fd_ < 0) throw std::runtime_error("socket: " + std::string(std::strerror(errno)));
  sockaddr_in addr = resolve({bind_host, port});
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    std::string err = std::strerror(errno);
    ::close(fd_);
    throw std::runtime_error("bind " + bind_host + ":" + std::to_string(port) + ": " + err);
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  local_ = endpoint_of(addr);
  if (local_.host == "0.0.0.0") local_.host = "127.0.0.1";
}

UdpTransport::~UdpTransport() {
  if (fd_ >= 0) ::close(fd_);
}

bool UdpTransport::send(const Endpoint& to, std::string_view data) {
  sockaddr_in addr = resolve(to);
  ssize_t n = ::sendto(fd_, data.data(), data.size(), 0, reinterpret_cast<sockaddr*>(&addr),
                       sizeof addr);
  return n == static_cast<ssize_t>(data.size());
}

std::optional<Datagram> UdpTransport::receive(double timeout) {
  pollfd p{fd_, POLLIN, 0};
  int ms = static_cast<int>(std::ceil(std::max(0.0, timeout) * 1000));
  if (::poll(&p, 1, ms) <= 0) return std::nullopt;
  char buf[65536];
  sockaddr_in from{};
  socklen_t len = sizeof from;
  ssize_t n = ::recvfrom(fd_, buf, sizeof buf, 0, reinterpret_cast<sockaddr*>(&from), &len);
  if (n < 0) return std::nullopt;
  return Datagram{endpoint_of(from), std::string(buf, static_cast<std::size_t>(n))};
}

Endpoint UdpTransport::local_endpoint() const { return local_; }

LossyTransport::LossyTransport(Transport& inner, double send_loss, double receive_loss,
                               std::uint32_t seed)
    : inner_(inner), send_loss_(send_loss), receive_loss_(receive_loss), rng_(seed) {}

bool LossyTransport::drop(double p) {
  std::lock_guard lock(rng_mutex_);
  bool d = std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  if (d) ++dropped_;
  return d;
}

bool LossyTransport::send(const Endpoint& to, std::string_view data) {
  if (drop(send_loss_)) return true;
  return inner_.send(to, data);
}

std::optional<Datagram> LossyTransport::receive(double timeout) {
  double deadline = monotonic_seconds() + timeout;
  for (;;) {
    auto d = inner_.receive(std::max(0.0, deadline - monotonic_seconds()));
    if (!d) return std::nullopt;
    if (!drop(receive_loss_)) return d;
  }
}

Ports Ports::from_environment() {
  Ports p;
  if (const char* h = std::getenv("ROBOJS_HOST"); h && *h) p.host = h;
  p.command = env_port("ROBOJS_COMMAND_PORT", p.command);
  p.state = env_port("ROBOJS_STATE_PORT", p.state);
  p.bridge = env_port("ROBOJS_BRIDGE_PORT", p.bridge);
  return p;
}

double monotonic_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace robojs::net
