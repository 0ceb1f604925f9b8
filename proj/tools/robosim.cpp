// SPDX-License-Identifier: Apache-2.0
// Simulated field with the safety guard in front of it, served over UDP.
#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "robojs/host/field.hpp"
#include "robojs/net/server.hpp"
#include "robojs/net/transport.hpp"
#include "robojs/safety/config.hpp"
#include "robojs/sim/scenario.hpp"

using namespace robojs;

namespace {

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted = true; }

}  // namespace

int main(int argc, char** argv) {
  net::Ports ports = net::Ports::from_environment();
  CLI::App app{"Run a simulated field and its safety guard"};
  std::string scenario_name = "maze";
  std::optional<std::uint32_t> seed;
  bool fast = false;
  double speed = 1.0;
  double duration = 0;
  std::string listen = "0.0.0.0:" + std::to_string(ports.command);
  std::string config_path;
  app.add_option("--scenario", scenario_name, "scenario name")->capture_default_str();
  app.add_option("--seed", seed, "seed for random placements");
  app.add_flag("--fast", fast, "run unpaced instead of in real time");
  app.add_option("--speed", speed, "multiple of real time")->check(CLI::PositiveNumber);
  app.add_option("--listen", listen,
                 "host[:port] for commands; state uses the next port")
      ->capture_default_str();
  app.add_option("--config", config_path, "safety configuration file");
  app.add_option("--duration", duration, "stop after this many simulated seconds");
  app.add_flag_callback("--list", [] {
    for (const auto& n : sim::scenario_names()) std::cout << n << '\n';
    std::exit(0);
  }, "print scenario names and exit");
  CLI11_PARSE(app, argc, argv);

  std::string host = listen;
  std::uint16_t command_port = ports.command;
  if (auto colon = listen.rfind(':'); colon != std::string::npos) {
    host = listen.substr(0, colon);
    try {
      command_port = static_cast<std::uint16_t>(std::stoi(listen.substr(colon + 1)));
    } catch (const std::exception&) {
      std::cerr << "robosim: bad --listen address " << listen << '\n';
      return 2;
    }
  }
  std::uint16_t state_port = command_port == ports.command ? ports.state : command_port + 1;

  try {
    safety::SafetyConfig config;
    if (!config_path.empty()) config = safety::load_safety_config(config_path);
    host::Field field(sim::load_scenario(scenario_name), seed, config);
    net::UdpTransport commands(command_port, host);
    net::UdpTransport state(state_port, host);
    net::GuardServer server(field, commands, state);
    server.start();
    field.start(fast ? 0.0 : speed);
    std::cerr << "robosim: scenario " << scenario_name << ", commands on "
              << commands.local_endpoint().str() << ", state on " << state.local_endpoint().str()
              << '\n';

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    while (!g_interrupted && (duration <= 0 || field.now() < duration)) {
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
    field.stop();
    server.stop();
    auto s = server.stats();
    std::cerr << "robosim: t=" << field.now() << " s, " << s.commands << " commands, "
              << s.duplicates << " duplicates, " << s.states_sent << " state datagrams\n";
  } catch (const std::exception& e) {
    std::cerr << "robosim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
