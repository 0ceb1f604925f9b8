// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "robojs/safety/guard.hpp"
#include "robojs/sim/simulator.hpp"

namespace robojs::host {

/// Simulator, safety guard and built-in opponents behind one lock. Time is
/// simulated: it advances only through tick().
class Field {
 public:
  using Listener = std::function<void(const sim::WorldState&)>;

  explicit Field(const sim::ScenarioConfig& scenario, std::optional<std::uint32_t> seed = {},
                 safety::SafetyConfig config = {});
  ~Field();

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  /// Replaces the scenario. Sessions keep running; the guard starts over.
  void load(const sim::ScenarioConfig& scenario, std::optional<std::uint32_t> seed = {});

  /// Advances one control period and notifies listeners.
  void tick();
  double now() const;
  sim::WorldState world() const;
  sim::ScenarioConfig scenario() const;
  std::vector<sim::Item> items() const;
  /// Walls of the current scenario, for viewers.
  std::vector<sim::Segment> walls() const;
  const safety::SafetyConfig& safety_config() const { return config_; }

  safety::Guard::Outcome command(const std::string& session, const net::CommandMsg& cmd);
  void halt(const std::string& session, int robot_id, bool release);
  void end_session(const std::string& session);

  int add_listener(Listener listener);
  void remove_listener(int token);

  /// Blocks until a frame after `seq` exists, `seconds` of wall time pass or
  /// `stop` fires. True on a new frame.
  bool wait_after(std::uint64_t seq, double seconds, std::stop_token stop);

  /// Ticks on a background thread at `speed` times real time (0 = unpaced).
  void start(double speed = 1.0);
  void stop();
  bool running() const;

 private:
  void reset_locked(const sim::ScenarioConfig& scenario, std::optional<std::uint32_t> seed);

  safety::SafetyConfig config_;
  mutable std::mutex mutex_;
  std::condition_variable_any frame_cv_;
  std::unique_ptr<sim::Simulator> sim_;
  std::unique_ptr<safety::Guard> guard_;
  double next_adversary_ = 0;

  std::mutex listeners_mutex_;
  std::map<int, Listener> listeners_;
  int next_token_ = 1;

  std::jthread loop_;
};

}  // namespace robojs::host
