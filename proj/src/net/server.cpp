// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/server.hpp"

#include "robojs/sim/scenario.hpp"

namespace robojs::net {

namespace {

constexpr const char* kServerSession = "guard";

}  // namespace

GuardServer::GuardServer(host::Field& field, Transport& commands, Transport& state,
                         ServerConfig config)
    : field_(field), commands_(commands), state_(state), config_(config) {}

GuardServer::~GuardServer() { stop(); }

void GuardServer::start() {
  stop();
  listener_ = field_.add_listener([this](const sim::WorldState& w) { publish(w); });
  command_thread_ = std::jthread([this](std::stop_token st) { command_loop(st); });
  state_thread_ = std::jthread([this](std::stop_token st) { state_loop(st); });
}

void GuardServer::stop() {
  if (listener_) {
    field_.remove_listener(listener_);
    listener_ = 0;
  }
  for (auto* t : {&command_thread_, &state_thread_}) {
    if (t->joinable()) {
      t->request_stop();
      t->join();
    }
  }
}

ServerStats GuardServer::stats() {
  std::lock_guard lock(mutex_);
  return stats_;
}

std::size_t GuardServer::subscribers() {
  std::lock_guard lock(mutex_);
  return subscribers_.size();
}

void GuardServer::reply(const Endpoint& to, Payload payload) {
  Envelope e;
  e.session = kServerSession;
  e.payload = std::move(payload);
  std::string bytes;
  {
    std::lock_guard lock(mutex_);
    e.seq = seq_.next(e.kind());
    bytes = encode(e);
  }
  commands_.send(to, bytes);
}

void GuardServer::prune(double now) {
  for (auto it = replies_.begin(); it != replies_.end();) {
    it = now - it->second.second > config_.dedup_ttl ? replies_.erase(it) : std::next(it);
  }
  for (auto it = subscribers_.begin(); it != subscribers_.end();) {
    it = now - it->second > config_.subscription_ttl ? subscribers_.erase(it) : std::next(it);
  }
}

void GuardServer::handle(const Datagram& d) {
  auto decoded = decode(d.data);
  auto* e = std::get_if<Envelope>(&decoded);
  double now = monotonic_seconds();
  if (!e) {
    std::lock_guard lock(mutex_);
    ++stats_.decode_errors;
    return;
  }
  if (auto* cmd = std::get_if<CommandMsg>(&e->payload)) {
    std::string cached;
    {
      std::lock_guard lock(mutex_);
      prune(now);
      auto it = replies_.find({e->session, cmd->request_id});
      if (it != replies_.end()) {
        ++stats_.duplicates;
        cached = it->second.first;
      }
    }
    if (!cached.empty()) {
      commands_.send(d.from, cached);
      return;
    }
    auto outcome = field_.command(e->session, *cmd);
    Envelope r;
    r.session = kServerSession;
    if (outcome.accepted) {
      r.payload = AckMsg{cmd->request_id, outcome.applied};
    } else {
      r.payload = RejectMsg{cmd->request_id, outcome.reason};
    }
    std::string bytes;
    {
      std::lock_guard lock(mutex_);
      ++stats_.commands;
      r.seq = seq_.next(r.kind());
      bytes = encode(r);
      replies_[{e->session, cmd->request_id}] = {bytes, now};
    }
    commands_.send(d.from, bytes);
  } else if (auto* halt = std::get_if<HaltMsg>(&e->payload)) {
    {
      std::lock_guard lock(mutex_);
      ++stats_.halts;
    }
    field_.halt(e->session, halt->robot_id, halt->release);
  } else if (auto* sc = std::get_if<ScenarioMsg>(&e->payload)) {
    ScenarioMsg out;
    out.request_id = sc->request_id;
    if (sc->op == "list") {
      out.op = "names";
      out.names = sim::scenario_names();
    } else if (sc->op == "load") {
      // Retransmitted loads must not restart the scenario twice.
      std::string cached;
      {
        std::lock_guard lock(mutex_);
        auto it = replies_.find({e->session + "/scenario", sc->request_id});
        if (it != replies_.end()) cached = it->second.first;
      }
      if (!cached.empty()) {
        commands_.send(d.from, cached);
        return;
      }
      try {
        field_.load(sim::load_scenario(sc->name), sc->seed);
        out.op = "loaded";
        out.name = sc->name;
        out.seed = sc->seed;
      } catch (const std::exception& ex) {
        out.op = "error";
        out.error = ex.what();
      }
      Envelope r;
      r.session = kServerSession;
      r.payload = out;
      std::string bytes;
      {
        std::lock_guard lock(mutex_);
        r.seq = seq_.next(r.kind());
        bytes = encode(r);
        replies_[{e->session + "/scenario", sc->request_id}] = {bytes, now};
      }
      commands_.send(d.from, bytes);
      return;
    } else {
      out.op = "error";
      out.error = "unknown scenario op '" + sc->op + "'";
    }
    reply(d.from, out);
  }
}

void GuardServer::command_loop(std::stop_token stop) {
  while (!stop.stop_requested()) {
    if (auto d = commands_.receive(0.05)) handle(*d);
  }
}

void GuardServer::state_loop(std::stop_token stop) {
  while (!stop.stop_requested()) {
    auto d = state_.receive(0.05);
    if (!d) continue;
    auto decoded = decode(d->data);
    std::lock_guard lock(mutex_);
    auto* e = std::get_if<Envelope>(&decoded);
    if (!e) {
      ++stats_.decode_errors;
      continue;
    }
    auto* sc = std::get_if<ScenarioMsg>(&e->payload);
    if (sc && sc->op == "subscribe") subscribers_[d->from] = monotonic_seconds();
  }
}

void GuardServer::publish(const sim::WorldState& world) {
  Envelope e;
  e.session = kServerSession;
  e.payload = world;
  std::vector<Endpoint> targets;
  std::string bytes;
  {
    std::lock_guard lock(mutex_);
    prune(monotonic_seconds());
    for (const auto& [ep, _] : subscribers_) targets.push_back(ep);
    if (targets.empty()) return;
    e.seq = seq_.next(Kind::State);
    bytes = encode(e);
    stats_.states_sent += targets.size();
  }
  for (const auto& t : targets) state_.send(t, bytes);
}

}  // namespace robojs::net
