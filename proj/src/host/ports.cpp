// SPDX-License-Identifier: Apache-2.0
#include "robojs/host/ports.hpp"

#include <cmath>

#include "robojs/lang/number_format.hpp"

namespace robojs::host {

using exec::IoReply;
using exec::IoRequest;

FieldPort::FieldPort(Field& field, std::string session, Mode mode)
    : field_(field), session_(std::move(session)), mode_(mode) {}

void FieldPort::submit(const IoRequest& request) {
  auto outcome = field_.command(session_, request.command);
  IoReply reply;
  reply.request_id = request.request_id;
  reply.status = outcome.accepted ? IoReply::Status::Ack : IoReply::Status::Reject;
  reply.reason = outcome.reason;
  reply.applied = outcome.accepted ? outcome.applied : request.command;
  std::lock_guard lock(mutex_);
  replies_[request.request_id] = std::move(reply);
}

IoReply FieldPort::await(std::uint64_t request_id, std::stop_token stop) {
  std::lock_guard lock(mutex_);
  auto it = replies_.find(request_id);
  if (stop.stop_requested() || it == replies_.end()) {
    return {request_id, IoReply::Status::Cancelled, {}, {}};
  }
  IoReply r = std::move(it->second);
  replies_.erase(it);
  return r;
}

std::optional<exec::WorldSnapshot> FieldPort::world() {
  auto w = field_.world();
  double t = w.timestamp;
  return exec::WorldSnapshot{std::move(w), t};
}

bool FieldPort::wait_frame(double timeout, std::stop_token stop) {
  if (stop.stop_requested()) return false;
  if (mode_ == Mode::Lockstep) {
    field_.tick();
    return true;
  }
  return field_.wait_after(field_.world().frame_seq, timeout, stop);
}

double FieldPort::now() { return field_.now(); }

void FieldPort::halt(int robot_id) { field_.halt(session_, robot_id, true); }

StubPort::StubPort(std::ostream& log, sim::WorldState world)
    : log_(log), world_(std::move(world)) {}

void StubPort::submit(const IoRequest& request) {
  const auto& c = request.command;
  log_ << "[robot] " << net::to_string(c.skill) << " robot=" << c.robot_id;
  for (double p : c.params) log_ << ' ' << lang::format_number(p);
  log_ << '\n';
  if (auto* r = world_.robot(c.robot_id)) {
    if (c.skill == net::Skill::MoveTo) {
      r->x = c.params[0];
      r->y = c.params[1];
      r->theta = c.params[2];
    } else if (c.skill == net::Skill::TurnTo) {
      r->theta = c.params[0];
    } else if (c.skill == net::Skill::Catch || c.skill == net::Skill::Block) {
      world_.ball.x = r->x + 0.1115 * std::cos(r->theta * M_PI / 180);
      world_.ball.y = r->y + 0.1115 * std::sin(r->theta * M_PI / 180);
    }
  }
  replies_[request.request_id] = {request.request_id, IoReply::Status::Ack, {}, c};
}

IoReply StubPort::await(std::uint64_t request_id, std::stop_token stop) {
  auto it = replies_.find(request_id);
  if (stop.stop_requested() || it == replies_.end()) {
    return {request_id, IoReply::Status::Cancelled, {}, {}};
  }
  IoReply r = it->second;
  replies_.erase(it);
  return r;
}

std::optional<exec::WorldSnapshot> StubPort::world() {
  world_.timestamp = clock_;
  return exec::WorldSnapshot{world_, clock_};
}

bool StubPort::wait_frame(double, std::stop_token stop) {
  if (stop.stop_requested()) return false;
  clock_ += sim::Simulator::kDt;
  ++world_.frame_seq;
  return true;
}

double StubPort::now() { return clock_; }

void StubPort::halt(int robot_id) { log_ << "[robot] HALT robot=" << robot_id << '\n'; }

}  // namespace robojs::host
