// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>

#include "robojs/net/command.hpp"
#include "robojs/sim/world_state.hpp"

namespace robojs::exec {

struct IoRequest {
  std::uint64_t request_id = 0;
  std::string api_name;  // e.g. "moveTo"
  net::CommandMsg command;
};

struct IoReply {
  enum class Status { Ack, Reject, Timeout, Cancelled };

  std::uint64_t request_id = 0;
  Status status = Status::Ack;
  std::string reason;        // machine-readable, for Reject
  net::CommandMsg applied;   // command as admitted (targets clamped)
};

struct WorldSnapshot {
  sim::WorldState state;
  double received_at = 0;  // port clock, seconds
};

/// Asynchronous robot I/O as seen by a running program. Requests are
/// submitted one at a time; the program blocks in await() until the reply
/// arrives or stop is requested.
class IoPort {
 public:
  virtual ~IoPort() = default;

  virtual void submit(const IoRequest& request) = 0;
  /// Returns Cancelled when `stop` fires first.
  virtual IoReply await(std::uint64_t request_id, std::stop_token stop) = 0;

  /// Latest world frame, if any has arrived.
  virtual std::optional<WorldSnapshot> world() = 0;
  /// Blocks until a frame newer than the current one arrives, `timeout`
  /// seconds of port time pass, or `stop` fires. True on a new frame.
  virtual bool wait_frame(double timeout, std::stop_token stop) = 0;
  /// Port clock in seconds (simulated time for in-process ports).
  virtual double now() = 0;

  /// Fire-and-forget halt for `robot_id`.
  virtual void halt(int robot_id) = 0;
};

}  // namespace robojs::exec
