// SPDX-License-Identifier: Apache-2.0
// robojs: check, compile, run and serve RoboJS programs.
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "robojs/api/manifest.hpp"
#include "robojs/api/robot_api.hpp"
#include "robojs/check/instrument.hpp"
#include "robojs/check/static_check.hpp"
#include "robojs/exec/interpreter.hpp"
#include "robojs/host/field.hpp"
#include "robojs/host/ports.hpp"
#include "robojs/lang/syntax.hpp"
#include "robojs/net/bridge.hpp"
#include "robojs/net/client.hpp"
#include "robojs/sim/scenario.hpp"

using namespace robojs;

namespace {

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted = true; }

void catch_signals() {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
}

std::optional<std::string> read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print(const lang::Diagnostics& ds) {
  for (const auto& d : ds) std::cerr << lang::format_diagnostic(d) << '\n';
}

check::ArityTable arities(const std::string& manifest_path) {
  if (manifest_path.empty()) return check::ArityTable::standard();
  auto text = read_text(manifest_path);
  if (!text) throw std::runtime_error("cannot read " + manifest_path);
  return check::ArityTable::from_manifest(api::manifest_from_json(*text));
}

/// Parses `path`, printing syntax diagnostics. Null on failure.
std::shared_ptr<const lang::Program> load_program(const std::string& path) {
  auto source = read_text(path);
  if (!source) {
    std::cerr << "robojs: cannot read " << path << '\n';
    return nullptr;
  }
  auto parsed = lang::parse_source(*source, path);
  if (!parsed.ok()) {
    print(parsed.diagnostics);
    return nullptr;
  }
  return std::shared_ptr<const lang::Program>(std::move(parsed.program));
}

std::pair<std::string, std::uint16_t> split_address(const std::string& address,
                                                    std::uint16_t default_port) {
  auto colon = address.rfind(':');
  if (colon == std::string::npos) return {address, default_port};
  return {address.substr(0, colon),
          static_cast<std::uint16_t>(std::stoi(address.substr(colon + 1)))};
}

/// Where a program's robot commands go.
struct TargetOptions {
  std::string sim;            // guard host[:port]
  bool stub = false;
  bool local = false;
  bool fast = false;          // local only: lockstep, no pacing
  double speed = 1.0;
  std::string scenario;
  std::optional<std::uint32_t> seed;

  void add(CLI::App* cmd) {
    cmd->add_option("--sim", sim, "guard address host[:port]");
    cmd->add_flag("--stub", stub, "acknowledge every command without robots");
    cmd->add_flag("--local", local, "simulate the field in this process");
    cmd->add_flag("--fast", fast, "with --local: advance the field only while the program waits");
    cmd->add_option("--speed", speed, "with --local: multiple of real time")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--scenario", scenario, "scenario for --local and --stub, and for maze walls");
    cmd->add_option("--seed", seed, "seed for random placements");
  }
};

class Connection {
 public:
  explicit Connection(const TargetOptions& o) {
    std::string session = "cli-" + std::to_string(::getpid());
    std::string name = o.scenario.empty() && (o.local || o.stub) ? "maze" : o.scenario;
    if (!name.empty()) scenario_ = sim::resolve(sim::load_scenario(name), o.seed);
    if (o.stub) {
      port_ = std::make_unique<host::StubPort>(std::cerr, sim::initial_world(*scenario_));
    } else if (o.local) {
      field_ = std::make_unique<host::Field>(sim::load_scenario(name), o.seed);
      auto mode = o.fast ? host::FieldPort::Mode::Lockstep : host::FieldPort::Mode::Threaded;
      port_ = std::make_unique<host::FieldPort>(*field_, session, mode);
      if (!o.fast) field_->start(o.speed);
    } else {
      net::Ports ports = net::Ports::from_environment();
      auto [host, port] = o.sim.empty() ? std::pair{ports.host, ports.command}
                                        : split_address(o.sim, ports.command);
      std::uint16_t state = port == ports.command ? ports.state : port + 1;
      transport_ = std::make_unique<net::UdpTransport>();
      client_ = std::make_unique<net::CommandClient>(*transport_, net::Endpoint{host, port},
                                                     session);
      client_->subscribe(net::Endpoint{host, state});
      // a program's first sensor read needs a frame
      client_->wait_state(0, 1.0, {});
      port_ = std::make_unique<net::NetworkPort>(*client_);
    }
  }

  ~Connection() {
    if (field_) field_->stop();
  }

  void install(exec::Interpreter& interp) {
    api::install_robot_api(interp, *port_, session_,
                           scenario_ ? api::api_config_for(*scenario_) : api::ApiConfig{});
  }

 private:
  std::optional<sim::ScenarioConfig> scenario_;
  std::unique_ptr<host::Field> field_;
  std::unique_ptr<net::UdpTransport> transport_;
  std::unique_ptr<net::CommandClient> client_;
  std::unique_ptr<exec::IoPort> port_;
  api::RobotSession session_;
};

/// Stops `interp` when the user interrupts.
class InterruptWatch {
 public:
  explicit InterruptWatch(exec::Interpreter& interp)
      : thread_([&interp](std::stop_token st) {
          while (!st.stop_requested()) {
            if (g_interrupted.exchange(false)) interp.stop();
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
          }
        }) {}

 private:
  std::jthread thread_;
};

int exit_code(const exec::ExecOutcome& o) {
  switch (o.status) {
    case exec::ExecStatus::Completed: return 0;
    case exec::ExecStatus::Aborted: return 1;
    case exec::ExecStatus::BudgetExhausted: return 3;
    case exec::ExecStatus::Stopped: return 130;
  }
  return 1;
}

exec::ExecOptions exec_options(const std::string& mode) {
  exec::ExecOptions options;
  options.mode = mode == "permissive" ? exec::Mode::Permissive : exec::Mode::Strict;
  options.on_print = [](const std::string& line) { std::cout << line << std::endl; };
  return options;
}

int cmd_check(const std::string& file, const std::string& manifest) {
  auto program = load_program(file);
  if (!program) return 1;
  auto ds = check::static_check(*program, arities(manifest));
  print(ds);
  return ds.empty() ? 0 : 1;
}

int cmd_compile(const std::string& file, const std::string& out, const std::string& manifest) {
  auto program = load_program(file);
  if (!program) return 1;
  std::string text = check::instrument(*program, arities(manifest));
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream o(out, std::ios::binary);
  o << text;
  if (!o) {
    std::cerr << "robojs: cannot write " << out << '\n';
    return 1;
  }
  return 0;
}

int cmd_run(const std::string& file, const std::string& mode, const TargetOptions& target) {
  auto program = load_program(file);
  if (!program) return 1;
  if (mode == "strict") {
    auto ds = check::static_check(*program);
    if (!ds.empty()) {
      print(ds);
      return 1;
    }
  }
  Connection connection(target);
  exec::Interpreter interp(exec_options(mode));
  connection.install(interp);
  catch_signals();
  InterruptWatch watch(interp);
  exec::ExecOutcome outcome = interp.run(program);
  if (outcome.diagnostic) std::cerr << lang::format_diagnostic(*outcome.diagnostic) << '\n';
  if (outcome.status == exec::ExecStatus::BudgetExhausted) {
    std::cerr << "robojs: step budget exhausted after " << outcome.steps << " steps\n";
  }
  return exit_code(outcome);
}

int cmd_repl(const std::string& file, const TargetOptions& target) {
  Connection connection(target);
  exec::Interpreter interp(exec_options("strict"));
  connection.install(interp);
  catch_signals();
  InterruptWatch watch(interp);
  if (!file.empty()) {
    auto program = load_program(file);
    if (!program) return 1;
    auto outcome = interp.run(program);
    if (outcome.diagnostic) std::cerr << lang::format_diagnostic(*outcome.diagnostic) << '\n';
  }
  bool tty = ::isatty(STDIN_FILENO);
  for (std::string line;;) {
    if (tty) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == ".exit") break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto r = interp.repl_eval(line);
    (r.ok ? std::cout : std::cerr) << r.text << std::endl;
  }
  return 0;
}

int cmd_serve(const std::string& listen, bool remote, const std::string& scenario,
              std::optional<std::uint32_t> seed, double speed, const std::string& static_dir,
              const std::string& revisions) {
  net::Ports ports = net::Ports::from_environment();
  auto [host, port] = split_address(listen.empty() ? "0.0.0.0" : listen, ports.bridge);
  std::unique_ptr<host::Field> field;
  std::unique_ptr<net::Backend> backend;
  if (remote) {
    backend = std::make_unique<net::RemoteBackend>(ports);
    if (!scenario.empty()) {
      std::string error = backend->load_scenario(scenario, seed);
      if (!error.empty()) throw std::runtime_error(error);
    }
  } else {
    std::string name = scenario.empty() ? "maze" : scenario;
    field = std::make_unique<host::Field>(sim::load_scenario(name), seed);
    field->start(speed);
    backend = std::make_unique<net::LocalBackend>(*field, name);
  }
  net::Bridge bridge(*backend, net::BridgeConfig{static_dir, revisions});
  int bound = bridge.listen(host, port);
  if (bound < 0) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
  std::cerr << "robojs: bridge on http://" << host << ":" << bound << "/, revisions in "
            << revisions << '\n';
  catch_signals();
  while (!g_interrupted) std::this_thread::sleep_for(std::chrono::milliseconds(50));
  bridge.stop();
  if (field) field->stop();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RoboJS: a JavaScript subset for programming robots"};
  app.require_subcommand(1);
  std::string file;
  std::string out;
  std::string manifest;
  std::string mode = "strict";
  TargetOptions target;

  auto* check = app.add_subcommand("check", "report syntax and static errors");
  check->add_option("file", file)->required();
  check->add_option("--manifest", manifest, "robot API manifest for arities");

  auto* compile = app.add_subcommand("compile", "emit the instrumented program");
  compile->add_option("file", file)->required();
  compile->add_option("-o,--output", out, "output file, '-' for stdout");
  compile->add_option("--manifest", manifest, "robot API manifest for arities");

  auto* run = app.add_subcommand("run", "run a program");
  run->add_option("file", file)->required();
  run->add_option("--mode", mode)->check(CLI::IsMember({"strict", "permissive"}));
  target.add(run);

  auto* repl = app.add_subcommand("repl", "evaluate expressions, optionally after a program");
  repl->add_option("file", file);
  target.add(repl);

  auto* show = app.add_subcommand("manifest", "print the robot API manifest");
  show->add_option("-o,--output", out, "output file");

  std::string listen;
  bool remote = false;
  std::string scenario;
  std::optional<std::uint32_t> seed;
  double speed = 1.0;
  std::string static_dir;
  std::string revisions = "revisions";
  auto* serve = app.add_subcommand("serve", "serve the browser bridge");
  serve->add_option("--listen", listen, "host[:port]");
  serve->add_flag("--remote", remote, "use a robosim guard instead of an in-process field");
  serve->add_option("--scenario", scenario, "scenario to load");
  serve->add_option("--seed", seed, "seed for random placements");
  serve->add_option("--speed", speed, "in-process field: multiple of real time")
      ->check(CLI::PositiveNumber);
  serve->add_option("--static", static_dir, "directory with the IDE files");
  serve->add_option("--revisions", revisions, "revision store root")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(file, manifest);
    if (*compile) return cmd_compile(file, out, manifest);
    if (*run) return cmd_run(file, mode, target);
    if (*repl) return cmd_repl(file, target);
    if (*show) {
      std::string text = api::manifest_to_json(api::api_catalog());
      if (out.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream(out) << text << '\n';
      }
      return 0;
    }
    if (*serve) return cmd_serve(listen, remote, scenario, seed, speed, static_dir, revisions);
  } catch (const std::exception& e) {
    std::cerr << "robojs: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
