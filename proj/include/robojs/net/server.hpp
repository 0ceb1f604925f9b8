// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "robojs/host/field.hpp"
#include "robojs/net/envelope.hpp"
#include "robojs/net/transport.hpp"

namespace robojs::net {

struct ServerConfig {
  double subscription_ttl = 10.0;  // s without renewal before a subscriber is dropped
  double dedup_ttl = 30.0;         // s a reply stays cached for retransmits
};

struct ServerStats {
  std::uint64_t commands = 0;    // distinct commands applied
  std::uint64_t duplicates = 0;  // retransmits answered from the cache
  std::uint64_t decode_errors = 0;
  std::uint64_t states_sent = 0;
  std::uint64_t halts = 0;
};

/// Guard-side endpoints: command ingress on one transport, state egress
/// and subscriptions on another.
class GuardServer {
 public:
  GuardServer(host::Field& field, Transport& commands, Transport& state,
              ServerConfig config = {});
  ~GuardServer();

  GuardServer(const GuardServer&) = delete;
  GuardServer& operator=(const GuardServer&) = delete;

  void start();
  void stop();
  ServerStats stats();
  std::size_t subscribers();

 private:
  void command_loop(std::stop_token stop);
  void state_loop(std::stop_token stop);
  void publish(const sim::WorldState& world);
  void handle(const Datagram& d);
  void reply(const Endpoint& to, Payload payload);
  void prune(double now);

  host::Field& field_;
  Transport& commands_;
  Transport& state_;
  ServerConfig config_;

  std::mutex mutex_;
  Sequencer seq_;
  std::map<std::pair<std::string, std::uint64_t>, std::pair<std::string, double>> replies_;
  std::map<Endpoint, double> subscribers_;
  ServerStats stats_;
  int listener_ = 0;

  std::jthread command_thread_;
  std::jthread state_thread_;
};

}  // namespace robojs::net
