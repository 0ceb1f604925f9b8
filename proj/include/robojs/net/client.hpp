// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>

#include "robojs/exec/io_port.hpp"
#include "robojs/net/envelope.hpp"
#include "robojs/net/transport.hpp"

namespace robojs::net {

struct ClientConfig {
  double resend_interval = 0.1;  // s
  double reply_timeout = 2.0;    // s from the first send
  double subscribe_interval = 2.0;
};

struct CommandResult {
  enum class Status { Ack, Reject, Timeout, Cancelled };
  Status status = Status::Timeout;
  CommandMsg applied;
  std::string reason;
  int attempts = 0;       // datagrams sent
  double elapsed = 0;     // s until the outcome
};

struct ClientStats {
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t decode_errors = 0;
  std::uint64_t states = 0;
};

/// Runtime-side endpoint: reliable commands to the guard and a state
/// subscription, over one socket. A receiver thread owns the socket's
/// inbound side.
class CommandClient {
 public:
  CommandClient(Transport& transport, Endpoint guard, std::string session,
                ClientConfig config = {});
  ~CommandClient();

  CommandClient(const CommandClient&) = delete;
  CommandClient& operator=(const CommandClient&) = delete;

  const std::string& session() const { return session_; }

  /// Sends `cmd` and keeps resending until a matching ACK/REJECT, the reply
  /// timeout, or `stop`.
  CommandResult request(const CommandMsg& cmd, std::stop_token stop = {});
  /// First transmission only; finish() resends and waits.
  void begin(const CommandMsg& cmd);
  CommandResult finish(std::uint64_t request_id, std::stop_token stop = {});

  void send_halt(int robot_id, bool release);

  /// Starts (and keeps renewing) a subscription at the state server.
  void subscribe(Endpoint state_server);
  std::optional<exec::WorldSnapshot> latest_state();
  /// True once a frame newer than `after` arrives.
  bool wait_state(std::uint64_t after, double timeout, std::stop_token stop);

  /// Load or list scenarios at the guard; nullopt on timeout.
  std::optional<ScenarioMsg> scenario_request(ScenarioMsg msg, double timeout = 2.0);

  ClientStats stats();
  double now() const;

 private:
  struct Pending {
    CommandMsg cmd;
    double started = 0;
    double last_sent = 0;
    int attempts = 0;
    std::optional<CommandResult> result;
  };

  void send(Payload payload, const Endpoint& to);
  void receive_loop(std::stop_token stop);

  Transport& transport_;
  Endpoint guard_;
  std::string session_;
  ClientConfig config_;
  double epoch_;

  std::mutex mutex_;
  std::condition_variable_any cv_;
  Sequencer seq_;
  std::map<std::uint64_t, Pending> pending_;
  std::map<std::uint64_t, ScenarioMsg> scenario_replies_;
  std::uint64_t next_scenario_id_ = 1;
  std::optional<exec::WorldSnapshot> state_;
  std::optional<Endpoint> state_server_;
  double last_subscribe_ = -1e9;
  ClientStats stats_;

  std::jthread receiver_;
};

/// IoPort over a CommandClient, for programs driving a remote guard.
class NetworkPort : public exec::IoPort {
 public:
  explicit NetworkPort(CommandClient& client) : client_(client) {}

  void submit(const exec::IoRequest& request) override;
  exec::IoReply await(std::uint64_t request_id, std::stop_token stop) override;
  std::optional<exec::WorldSnapshot> world() override { return client_.latest_state(); }
  bool wait_frame(double timeout, std::stop_token stop) override;
  double now() override { return client_.now(); }
  void halt(int robot_id) override { client_.send_halt(robot_id, true); }

 private:
  CommandClient& client_;
};

}  // namespace robojs::net
