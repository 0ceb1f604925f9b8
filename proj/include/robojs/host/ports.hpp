// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <mutex>
#include <ostream>
#include <string>

#include "robojs/exec/io_port.hpp"
#include "robojs/host/field.hpp"

namespace robojs::host {

/// In-process port onto a Field. In lockstep mode every wait for a frame
/// ticks the field itself, so a run is deterministic and as fast as the
/// host allows; in threaded mode the field runs on its own clock.
class FieldPort : public exec::IoPort {
 public:
  enum class Mode { Lockstep, Threaded };

  FieldPort(Field& field, std::string session, Mode mode = Mode::Lockstep);

  void submit(const exec::IoRequest& request) override;
  exec::IoReply await(std::uint64_t request_id, std::stop_token stop) override;
  std::optional<exec::WorldSnapshot> world() override;
  bool wait_frame(double timeout, std::stop_token stop) override;
  double now() override;
  void halt(int robot_id) override;

  const std::string& session() const { return session_; }

 private:
  Field& field_;
  std::string session_;
  Mode mode_;
  std::mutex mutex_;
  std::map<std::uint64_t, exec::IoReply> replies_;
};

/// Port with no robots behind it: every command is acknowledged and
/// echoed to `log`, and motions complete at once on a private copy of the
/// scenario's initial world.
class StubPort : public exec::IoPort {
 public:
  StubPort(std::ostream& log, sim::WorldState world);

  void submit(const exec::IoRequest& request) override;
  exec::IoReply await(std::uint64_t request_id, std::stop_token stop) override;
  std::optional<exec::WorldSnapshot> world() override;
  bool wait_frame(double timeout, std::stop_token stop) override;
  double now() override;
  void halt(int robot_id) override;

 private:
  std::ostream& log_;
  sim::WorldState world_;
  double clock_ = 0;
  std::map<std::uint64_t, exec::IoReply> replies_;
};

}  // namespace robojs::host
