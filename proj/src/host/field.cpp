// SPDX-License-Identifier: Apache-2.0
#include "robojs/host/field.hpp"

#include <chrono>

#include "robojs/sim/adversary.hpp"

namespace robojs::host {

namespace {

std::string adversary_session(const std::string& kind) { return "adversary:" + kind; }

}  // namespace

Field::Field(const sim::ScenarioConfig& scenario, std::optional<std::uint32_t> seed,
             safety::SafetyConfig config)
    : config_(std::move(config)) {
  reset_locked(scenario, seed);
}

Field::~Field() { stop(); }

void Field::reset_locked(const sim::ScenarioConfig& scenario, std::optional<std::uint32_t> seed) {
  sim::RobotModel model;
  model.radius = config_.robot_radius;
  model.max_accel = config_.max_decel;
  auto next = std::make_unique<sim::Simulator>(scenario, seed, model);
  if (sim_) next->continue_clock(sim_->world().timestamp, sim_->world().frame_seq);
  sim_ = std::move(next);
  guard_ = std::make_unique<safety::Guard>(config_);
  guard_->observe(sim_->world());
  const auto& sc = sim_->scenario();
  for (int id : sc.adversary_robots) guard_->reserve(id, adversary_session(sc.adversary));
  next_adversary_ = 0;
}

void Field::load(const sim::ScenarioConfig& scenario, std::optional<std::uint32_t> seed) {
  sim::WorldState w;
  {
    std::lock_guard lock(mutex_);
    reset_locked(scenario, seed);
    w = sim_->world();
  }
  frame_cv_.notify_all();
  std::lock_guard lock(listeners_mutex_);
  for (auto& [_, l] : listeners_) l(w);
}

void Field::tick() {
  sim::WorldState w;
  {
    std::lock_guard lock(mutex_);
    double now = sim_->world().timestamp;
    const auto& sc = sim_->scenario();
    if (!sc.adversary.empty() && now >= next_adversary_ - 1e-9) {
      for (const auto& cmd : sim::adversary_commands(sc.adversary, sc.adversary_robots,
                                                     sim_->world())) {
        guard_->command(adversary_session(sc.adversary), cmd, now);
      }
      next_adversary_ = now + sim::kAdversaryPeriod;
    }
    sim_->step(guard_->control(now));
    guard_->observe(sim_->world());
    w = sim_->world();
  }
  frame_cv_.notify_all();
  std::lock_guard lock(listeners_mutex_);
  for (auto& [_, l] : listeners_) l(w);
}

double Field::now() const {
  std::lock_guard lock(mutex_);
  return sim_->world().timestamp;
}

sim::WorldState Field::world() const {
  std::lock_guard lock(mutex_);
  return sim_->world();
}

sim::ScenarioConfig Field::scenario() const {
  std::lock_guard lock(mutex_);
  return sim_->scenario();
}

std::vector<sim::Item> Field::items() const {
  std::lock_guard lock(mutex_);
  return sim_->items();
}

std::vector<sim::Segment> Field::walls() const {
  std::lock_guard lock(mutex_);
  return sim_->environment().walls;
}

safety::Guard::Outcome Field::command(const std::string& session, const net::CommandMsg& cmd) {
  std::lock_guard lock(mutex_);
  return guard_->command(session, cmd, sim_->world().timestamp);
}

void Field::halt(const std::string& session, int robot_id, bool release) {
  std::lock_guard lock(mutex_);
  guard_->halt(session, robot_id, release);
}

void Field::end_session(const std::string& session) {
  std::lock_guard lock(mutex_);
  guard_->end_session(session);
}

int Field::add_listener(Listener listener) {
  std::lock_guard lock(listeners_mutex_);
  int token = next_token_++;
  listeners_[token] = std::move(listener);
  return token;
}

void Field::remove_listener(int token) {
  std::lock_guard lock(listeners_mutex_);
  listeners_.erase(token);
}

bool Field::wait_after(std::uint64_t seq, double seconds, std::stop_token stop) {
  std::unique_lock lock(mutex_);
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
  return frame_cv_.wait_until(lock, stop, deadline,
                              [&] { return sim_->world().frame_seq > seq; });
}

void Field::start(double speed) {
  stop();
  loop_ = std::jthread([this, speed](std::stop_token st) {
    using clock = std::chrono::steady_clock;
    auto period = std::chrono::duration_cast<clock::duration>(
        std::chrono::duration<double>(sim::Simulator::kDt / (speed > 0 ? speed : 1)));
    auto next = clock::now();
    while (!st.stop_requested()) {
      tick();
      if (speed > 0) {
        next += period;
        auto now = clock::now();
        if (next < now - period * 10) next = now;  // fell far behind; do not burst
        std::this_thread::sleep_until(next);
      }
    }
  });
}

void Field::stop() {
  if (loop_.joinable()) {
    loop_.request_stop();
    loop_.join();
  }
}

bool Field::running() const { return loop_.joinable(); }

}  // namespace robojs::host
