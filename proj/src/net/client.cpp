// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/client.hpp"

#include <algorithm>
#include <chrono>

namespace robojs::net {

namespace {

auto seconds(double s) {
  return std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(std::max(0.0, s)));
}

}  // namespace

CommandClient::CommandClient(Transport& transport, Endpoint guard, std::string session,
                             ClientConfig config)
    : transport_(transport),
      guard_(std::move(guard)),
      session_(std::move(session)),
      config_(config),
      epoch_(monotonic_seconds()) {
  receiver_ = std::jthread([this](std::stop_token st) { receive_loop(st); });
}

CommandClient::~CommandClient() {
  receiver_.request_stop();
  if (receiver_.joinable()) receiver_.join();
}

double CommandClient::now() const { return monotonic_seconds() - epoch_; }

void CommandClient::send(Payload payload, const Endpoint& to) {
  Envelope e;
  e.session = session_;
  e.payload = std::move(payload);
  {
    std::lock_guard lock(mutex_);
    e.seq = seq_.next(e.kind());
    ++stats_.sent;
  }
  transport_.send(to, encode(e));
}

void CommandClient::begin(const CommandMsg& cmd) {
  {
    std::lock_guard lock(mutex_);
    Pending p;
    p.cmd = cmd;
    p.started = p.last_sent = now();
    p.attempts = 1;
    pending_[cmd.request_id] = p;
  }
  send(cmd, guard_);
}

CommandResult CommandClient::finish(std::uint64_t request_id, std::stop_token stop) {
  std::unique_lock lock(mutex_);
  auto it = pending_.find(request_id);
  if (it == pending_.end()) {
    CommandResult out;
    out.status = CommandResult::Status::Cancelled;
    return out;
  }
  for (;;) {
    Pending& p = it->second;
    double t = now();
    CommandResult out;
    if (p.result) {
      out = *p.result;
    } else if (stop.stop_requested()) {
      out.status = CommandResult::Status::Cancelled;
    } else if (t - p.started >= config_.reply_timeout) {
      out.status = CommandResult::Status::Timeout;
    } else {
      if (t - p.last_sent >= config_.resend_interval) {
        p.last_sent = t;
        ++p.attempts;
        CommandMsg cmd = p.cmd;
        lock.unlock();
        send(cmd, guard_);
        lock.lock();
        it = pending_.find(request_id);
        continue;
      }
      double wake = std::min(p.last_sent + config_.resend_interval,
                             p.started + config_.reply_timeout);
      cv_.wait_until(lock, stop, std::chrono::steady_clock::now() + seconds(wake - t),
                     [&] { return it->second.result.has_value(); });
      continue;
    }
    out.attempts = p.attempts;
    if (!p.result) out.elapsed = t - p.started;
    pending_.erase(it);
    return out;
  }
}

CommandResult CommandClient::request(const CommandMsg& cmd, std::stop_token stop) {
  begin(cmd);
  return finish(cmd.request_id, stop);
}

void CommandClient::send_halt(int robot_id, bool release) {
  // Unacknowledged; a few copies make loss unlikely and halts are idempotent.
  for (int i = 0; i < 3; ++i) send(HaltMsg{robot_id, release}, guard_);
}

void CommandClient::subscribe(Endpoint state_server) {
  {
    std::lock_guard lock(mutex_);
    state_server_ = state_server;
    last_subscribe_ = now();
  }
  ScenarioMsg sub;
  sub.op = "subscribe";
  send(sub, state_server);
}

std::optional<exec::WorldSnapshot> CommandClient::latest_state() {
  std::lock_guard lock(mutex_);
  return state_;
}

bool CommandClient::wait_state(std::uint64_t after, double timeout, std::stop_token stop) {
  std::unique_lock lock(mutex_);
  return cv_.wait_for(lock, stop, seconds(timeout),
                      [&] { return state_ && state_->state.frame_seq > after; });
}

std::optional<ScenarioMsg> CommandClient::scenario_request(ScenarioMsg msg, double timeout) {
  {
    std::lock_guard lock(mutex_);
    msg.request_id = next_scenario_id_++;
  }
  double start = now();
  double last = -1e9;
  std::unique_lock lock(mutex_);
  while (now() - start < timeout) {
    auto it = scenario_replies_.find(msg.request_id);
    if (it != scenario_replies_.end()) {
      ScenarioMsg r = it->second;
      scenario_replies_.erase(it);
      return r;
    }
    if (now() - last >= config_.resend_interval) {
      last = now();
      lock.unlock();
      send(msg, guard_);
      lock.lock();
      continue;
    }
    cv_.wait_for(lock, seconds(config_.resend_interval / 2));
  }
  return std::nullopt;
}

ClientStats CommandClient::stats() {
  std::lock_guard lock(mutex_);
  return stats_;
}

void CommandClient::receive_loop(std::stop_token stop) {
  while (!stop.stop_requested()) {
    std::optional<Endpoint> renew;
    {
      std::lock_guard lock(mutex_);
      if (state_server_ && now() - last_subscribe_ >= config_.subscribe_interval) {
        renew = state_server_;
        last_subscribe_ = now();
      }
    }
    if (renew) {
      ScenarioMsg sub;
      sub.op = "subscribe";
      send(sub, *renew);
    }
    auto d = transport_.receive(0.02);
    if (!d) continue;
    auto decoded = decode(d->data);
    std::lock_guard lock(mutex_);
    ++stats_.received;
    auto* e = std::get_if<Envelope>(&decoded);
    if (!e) {
      ++stats_.decode_errors;
      continue;
    }
    if (auto* ack = std::get_if<AckMsg>(&e->payload)) {
      auto it = pending_.find(ack->request_id);
      if (it != pending_.end() && !it->second.result) {
        CommandResult r;
        r.status = CommandResult::Status::Ack;
        r.applied = ack->applied;
        r.elapsed = now() - it->second.started;
        it->second.result = r;
      }
    } else if (auto* rej = std::get_if<RejectMsg>(&e->payload)) {
      auto it = pending_.find(rej->request_id);
      if (it != pending_.end() && !it->second.result) {
        CommandResult r;
        r.status = CommandResult::Status::Reject;
        r.reason = rej->reason;
        r.applied = it->second.cmd;
        r.elapsed = now() - it->second.started;
        it->second.result = r;
      }
    } else if (auto* w = std::get_if<sim::WorldState>(&e->payload)) {
      ++stats_.states;
      if (!state_ || w->frame_seq > state_->state.frame_seq) {
        state_ = exec::WorldSnapshot{*w, now()};
      }
    } else if (auto* s = std::get_if<ScenarioMsg>(&e->payload)) {
      scenario_replies_[s->request_id] = *s;
    }
    cv_.notify_all();
  }
}

void NetworkPort::submit(const exec::IoRequest& request) {
  net::CommandMsg cmd = request.command;
  cmd.request_id = request.request_id;
  client_.begin(cmd);
}

exec::IoReply NetworkPort::await(std::uint64_t request_id, std::stop_token stop) {
  CommandResult r = client_.finish(request_id, stop);
  exec::IoReply reply;
  reply.request_id = request_id;
  reply.applied = r.applied;
  reply.reason = r.reason;
  switch (r.status) {
    case CommandResult::Status::Ack: reply.status = exec::IoReply::Status::Ack; break;
    case CommandResult::Status::Reject: reply.status = exec::IoReply::Status::Reject; break;
    case CommandResult::Status::Timeout: reply.status = exec::IoReply::Status::Timeout; break;
    case CommandResult::Status::Cancelled:
      reply.status = exec::IoReply::Status::Cancelled;
      break;
  }
  return reply;
}

bool NetworkPort::wait_frame(double timeout, std::stop_token stop) {
  auto s = client_.latest_state();
  return client_.wait_state(s ? s->state.frame_seq : 0, timeout, stop);
}

}  // namespace robojs::net
