// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/bridge.hpp"

#include <chrono>

#include "httplib.h"
#include "json.hpp"
#include "robojs/api/manifest.hpp"
#include "robojs/check/static_check.hpp"
#include "robojs/host/ports.hpp"
#include "robojs/lang/syntax.hpp"
#include "robojs/net/envelope.hpp"
#include "robojs/sim/scenario.hpp"

namespace robojs::net {

using json = nlohmann::ordered_json;

// --- backends ---------------------------------------------------------------

LocalBackend::LocalBackend(host::Field& field, std::string scenario_name)
    : field_(field), name_(std::move(scenario_name)) {}

std::unique_ptr<exec::IoPort> LocalBackend::open_port(const std::string& session) {
  return std::make_unique<host::FieldPort>(field_, session, host::FieldPort::Mode::Threaded);
}

std::vector<std::string> LocalBackend::scenario_names() { return sim::scenario_names(); }

std::string LocalBackend::load_scenario(const std::string& name,
                                        std::optional<std::uint32_t> seed) {
  try {
    field_.load(sim::load_scenario(name), seed);
  } catch (const std::exception& e) {
    return e.what();
  }
  std::lock_guard lock(mutex_);
  name_ = name;
  return {};
}

std::string LocalBackend::scenario_name() {
  std::lock_guard lock(mutex_);
  return name_;
}

std::optional<sim::ScenarioConfig> LocalBackend::scenario() { return field_.scenario(); }

int LocalBackend::add_listener(FrameListener listener) {
  return field_.add_listener(std::move(listener));
}

void LocalBackend::remove_listener(int token) { field_.remove_listener(token); }

namespace {

/// A NetworkPort with its own socket and client.
class RemotePort : public exec::IoPort {
 public:
  RemotePort(const Ports& ports, const std::string& session, ClientConfig config)
      : client_(transport_, Endpoint{ports.host, ports.command}, session, config),
        port_(client_) {
    client_.subscribe(Endpoint{ports.host, ports.state});
    client_.wait_state(0, 1.0, {});
  }

  void submit(const exec::IoRequest& r) override { port_.submit(r); }
  exec::IoReply await(std::uint64_t id, std::stop_token stop) override {
    return port_.await(id, stop);
  }
  std::optional<exec::WorldSnapshot> world() override { return port_.world(); }
  bool wait_frame(double timeout, std::stop_token stop) override {
    return port_.wait_frame(timeout, stop);
  }
  double now() override { return port_.now(); }
  void halt(int robot_id) override { port_.halt(robot_id); }

 private:
  UdpTransport transport_;
  CommandClient client_;
  NetworkPort port_;
};

}  // namespace

RemoteBackend::RemoteBackend(Ports ports, ClientConfig config)
    : ports_(std::move(ports)),
      config_(config),
      control_(transport_, Endpoint{ports_.host, ports_.command}, "bridge", config_) {
  control_.subscribe(Endpoint{ports_.host, ports_.state});
  pump_ = std::jthread([this](std::stop_token stop) { pump(stop); });
}

RemoteBackend::~RemoteBackend() {
  pump_.request_stop();
  if (pump_.joinable()) pump_.join();
}

std::unique_ptr<exec::IoPort> RemoteBackend::open_port(const std::string& session) {
  return std::make_unique<RemotePort>(ports_, session, config_);
}

std::vector<std::string> RemoteBackend::scenario_names() {
  ScenarioMsg m;
  m.op = "list";
  auto reply = control_.scenario_request(m);
  if (!reply) return {};
  return reply->names;
}

std::string RemoteBackend::load_scenario(const std::string& name,
                                         std::optional<std::uint32_t> seed) {
  ScenarioMsg m;
  m.op = "load";
  m.name = name;
  m.seed = seed;
  auto reply = control_.scenario_request(m);
  if (!reply) return "the robot server did not answer";
  if (reply->op == "error") return reply->error;
  std::lock_guard lock(mutex_);
  name_ = name;
  return {};
}

std::string RemoteBackend::scenario_name() {
  std::lock_guard lock(mutex_);
  return name_;
}

std::optional<sim::ScenarioConfig> RemoteBackend::scenario() {
  // the guard does not send geometry; use the local copy of the same file
  std::string name = scenario_name();
  if (name.empty()) return std::nullopt;
  try {
    return sim::load_scenario(name);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int RemoteBackend::add_listener(FrameListener listener) {
  std::lock_guard lock(mutex_);
  listeners_[next_token_] = std::move(listener);
  return next_token_++;
}

void RemoteBackend::remove_listener(int token) {
  std::lock_guard lock(mutex_);
  listeners_.erase(token);
}

void RemoteBackend::pump(std::stop_token stop) {
  std::uint64_t last = 0;
  while (!stop.stop_requested()) {
    if (!control_.wait_state(last, 0.2, stop)) continue;
    auto snapshot = control_.latest_state();
    if (!snapshot) continue;
    last = snapshot->state.frame_seq;
    std::map<int, FrameListener> listeners;
    {
      std::lock_guard lock(mutex_);
      listeners = listeners_;
    }
    for (auto& [token, fn] : listeners) fn(snapshot->state);
  }
}

// --- bridge -----------------------------------------------------------------

namespace {

json diagnostic_json(const lang::Diagnostic& d) {
  return {{"phase", lang::to_string(d.phase)},
          {"category", lang::to_string(d.category)},
          {"message", d.message},
          {"file", d.span.file_id},
          {"span", {d.span.start_line, d.span.start_col, d.span.end_line, d.span.end_col}},
          {"text", lang::format_diagnostic(d)}};
}

json diagnostics_json(const lang::Diagnostics& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(diagnostic_json(d));
  return a;
}

void reply(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void fail(httplib::Response& res, int status, const std::string& message) {
  reply(res, {{"error", message}}, status);
}

std::optional<json> body_json(const httplib::Request& req, httplib::Response& res) {
  try {
    json j = json::parse(req.body);
    if (j.is_object()) return j;
  } catch (const json::exception&) {
  }
  fail(res, 400, "request body must be a JSON object");
  return std::nullopt;
}

std::string sse(const std::string& type, const std::string& data) {
  return "event: " + type + "\ndata: " + data + "\n\n";
}

}  // namespace

Bridge::Bridge(Backend& backend, BridgeConfig config)
    : backend_(backend),
      config_(std::move(config)),
      store_(config_.revisions_dir),
      server_(std::make_unique<httplib::Server>()) {
  port_ = backend_.open_port(config_.session);
  listener_ = backend_.add_listener([this](const sim::WorldState& w) { on_frame(w); });
  routes();
}

Bridge::~Bridge() { stop(); }

int Bridge::listen(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) return -1;
  server_thread_ = std::jthread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void Bridge::stop() {
  if (listener_) {
    backend_.remove_listener(listener_);
    listener_ = 0;
  }
  stop_run();
  {
    std::lock_guard lock(clients_mutex_);
    for (auto& c : clients_) {
      c->states.close();
      c->events.close();
    }
  }
  server_->stop();
  if (server_thread_.joinable()) server_thread_.join();
}

std::size_t Bridge::clients() {
  std::lock_guard lock(clients_mutex_);
  return clients_.size();
}

void Bridge::broadcast(const std::string& type, const std::string& data) {
  std::string event = sse(type, data);
  std::lock_guard lock(clients_mutex_);
  for (auto& c : clients_) c->events.push(event);
}

void Bridge::on_frame(const sim::WorldState& world) {
  std::string event = sse("state", state_to_json(world));
  std::lock_guard lock(clients_mutex_);
  for (auto& c : clients_) c->states.push(event);
}

std::string Bridge::scenario_event() {
  json j;
  j["name"] = backend_.scenario_name();
  auto config = backend_.scenario();
  sim::FieldGeometry field;
  j["field"] = {2 * field.half_x, 2 * field.half_y};
  if (config) {
    j["background"] = config->background;
    j["cell_size"] = config->cell_size;
    j["walls"] = json::array();
    for (const auto& w : sim::wall_segments(*config, field)) {
      j["walls"].push_back({w.a.x, w.a.y, w.b.x, w.b.y});
    }
    j["items"] = json::array();
    for (const auto& item : config->items) j["items"].push_back({item.x, item.y});
  }
  return j.dump();
}

void Bridge::stop_run() {
  std::unique_lock lock(run_mutex_);
  if (busy_ && interp_) interp_->stop();
  lock.unlock();
  if (run_thread_.joinable()) run_thread_.join();
}

void Bridge::routes() {
  auto& s = *server_;

  s.Get("/api/events", [this](const httplib::Request&, httplib::Response& res) {
    auto client = std::make_shared<Client>(config_.state_queue);
    client->events.push(sse("scenario", scenario_event()));
    {
      std::lock_guard lock(clients_mutex_);
      clients_.insert(client);
    }
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider(
        "text/event-stream",
        [client, idle = 0](std::size_t, httplib::DataSink& sink) mutable {
          while (auto e = client->events.try_pop()) {
            if (!sink.write(e->data(), e->size())) return false;
          }
          if (auto f = client->states.pop(std::chrono::milliseconds(50))) {
            idle = 0;
            if (!sink.write(f->data(), f->size())) return false;
          } else if (++idle % 20 == 0) {
            // comment line: keeps idle streams open and notices closed sockets
            if (!sink.write(":\n\n", 3)) return false;
          }
          if (client->events.closed()) sink.done();
          return true;
        },
        [this, client](bool) {
          std::lock_guard lock(clients_mutex_);
          clients_.erase(client);
        });
  });

  s.Get("/api/scenarios", [this](const httplib::Request&, httplib::Response& res) {
    reply(res, {{"names", backend_.scenario_names()}, {"current", backend_.scenario_name()}});
  });

  s.Get("/api/scenario", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(scenario_event(), "application/json");
  });

  s.Post("/api/scenario", [this](const httplib::Request& req, httplib::Response& res) {
    auto body = body_json(req, res);
    if (!body) return;
    if (!body->contains("name") || !(*body)["name"].is_string()) {
      return fail(res, 400, "missing scenario name");
    }
    std::optional<std::uint32_t> seed;
    if (body->contains("seed") && (*body)["seed"].is_number_unsigned()) {
      seed = (*body)["seed"].get<std::uint32_t>();
    }
    stop_run();
    std::string error = backend_.load_scenario((*body)["name"], seed);
    if (!error.empty()) return fail(res, 400, error);
    std::string event = scenario_event();
    broadcast("scenario", event);
    res.set_content(event, "application/json");
  });

  s.Post("/api/run", [this](const httplib::Request& req, httplib::Response& res) {
    auto body = body_json(req, res);
    if (!body) return;
    if (!body->contains("source") || !(*body)["source"].is_string()) {
      return fail(res, 400, "missing source");
    }
    std::string source = (*body)["source"];
    std::string account = body->value("account", "");
    std::string file = body->value("file", "");
    std::string mode_name = body->value("mode", "strict");
    if (mode_name != "strict" && mode_name != "permissive") {
      return fail(res, 400, "mode must be strict or permissive");
    }
    exec::Mode mode = mode_name == "strict" ? exec::Mode::Strict : exec::Mode::Permissive;

    json out;
    out["revision"] = nullptr;
    if (!account.empty() || !file.empty()) {
      if (!RevisionStore::valid_name(account) || !RevisionStore::valid_name(file)) {
        return fail(res, 400, "invalid account or file name");
      }
      if (auto rev = store_.save_if_changed(account, file, source)) out["revision"] = *rev;
    }

    std::string file_id = file.empty() ? "program.js" : file;
    auto parsed = lang::parse_source(source, file_id);
    lang::Diagnostics diagnostics = parsed.diagnostics;
    if (parsed.ok() && mode == exec::Mode::Strict) diagnostics = check::static_check(*parsed.program);
    if (!diagnostics.empty()) {
      out["started"] = false;
      out["diagnostics"] = diagnostics_json(diagnostics);
      broadcast("diagnostics", json{{"diagnostics", out["diagnostics"]}}.dump());
      return reply(res, out);
    }

    std::unique_lock lock(run_mutex_);
    if (busy_) return fail(res, 409, "a program is already running");
    if (run_thread_.joinable()) run_thread_.join();
    std::uint64_t id = ++run_id_;
    exec::ExecOptions options;
    options.mode = mode;
    options.on_print = [this, id](const std::string& line) {
      broadcast("output", json{{"run", id}, {"text", line}}.dump());
    };
    session_ = api::RobotSession{};
    interp_ = std::make_unique<exec::Interpreter>(std::move(options));
    auto config = backend_.scenario();
    api::install_robot_api(*interp_, *port_, session_,
                           config ? api::api_config_for(*config) : api::ApiConfig{});
    busy_ = true;
    std::shared_ptr<const lang::Program> program = std::move(parsed.program);
    run_thread_ = std::jthread([this, id, program] {
      broadcast("status", json{{"run", id}, {"status", "running"}}.dump());
      exec::ExecOutcome outcome = interp_->run(program);
      json status{{"run", id}, {"status", exec::to_string(outcome.status)},
                  {"steps", outcome.steps}};
      if (outcome.diagnostic) status["diagnostic"] = diagnostic_json(*outcome.diagnostic);
      {
        std::lock_guard guard(run_mutex_);
        busy_ = false;
      }
      broadcast("status", status.dump());
    });
    out["started"] = true;
    out["run"] = id;
    reply(res, out);
  });

  s.Post("/api/stop", [this](const httplib::Request&, httplib::Response& res) {
    bool was_running;
    {
      std::lock_guard lock(run_mutex_);
      was_running = busy_;
    }
    stop_run();
    reply(res, {{"stopped", was_running}});
  });

  s.Post("/api/repl", [this](const httplib::Request& req, httplib::Response& res) {
    auto body = body_json(req, res);
    if (!body) return;
    if (!body->contains("text") || !(*body)["text"].is_string()) {
      return fail(res, 400, "missing text");
    }
    std::lock_guard lock(run_mutex_);
    if (busy_) return fail(res, 409, "a program is running");
    if (!interp_) {
      interp_ = std::make_unique<exec::Interpreter>();
      auto config = backend_.scenario();
      api::install_robot_api(*interp_, *port_, session_,
                             config ? api::api_config_for(*config) : api::ApiConfig{});
    }
    exec::ReplResult r = interp_->repl_eval((*body)["text"].get<std::string>());
    reply(res, {{"ok", r.ok}, {"text", r.text}});
  });

  s.Get("/api/manifest", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(api::manifest_to_json(api::api_catalog()), "application/json");
  });

  s.Get("/api/files", [this](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("account")) return reply(res, {{"accounts", store_.accounts()}});
    std::string account = req.get_param_value("account");
    if (!RevisionStore::valid_name(account)) return fail(res, 400, "invalid account name");
    json files = json::array();
    for (const auto& f : store_.files(account)) {
      files.push_back({{"name", f}, {"revisions", store_.revisions(account, f)}});
    }
    reply(res, {{"account", account}, {"files", files}});
  });

  s.Get("/api/file", [this](const httplib::Request& req, httplib::Response& res) {
    std::string account = req.get_param_value("account");
    std::string file = req.get_param_value("file");
    if (!RevisionStore::valid_name(account) || !RevisionStore::valid_name(file)) {
      return fail(res, 400, "invalid account or file name");
    }
    auto revs = store_.revisions(account, file);
    if (revs.empty()) return fail(res, 404, "no such file");
    int rev = revs.back();
    if (req.has_param("revision")) {
      try {
        rev = std::stoi(req.get_param_value("revision"));
      } catch (const std::exception&) {
        return fail(res, 400, "invalid revision");
      }
    }
    auto text = store_.read(account, file, rev);
    if (!text) return fail(res, 404, "no such revision");
    reply(res, {{"account", account}, {"file", file}, {"revision", rev}, {"source", *text}});
  });

  if (!config_.static_dir.empty() && std::filesystem::is_directory(config_.static_dir)) {
    s.set_mount_point("/", config_.static_dir.string());
  }
}

}  // namespace robojs::net
