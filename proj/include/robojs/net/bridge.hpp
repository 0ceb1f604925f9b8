// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "robojs/api/robot_api.hpp"
#include "robojs/exec/interpreter.hpp"
#include "robojs/exec/io_port.hpp"
#include "robojs/host/field.hpp"
#include "robojs/net/client.hpp"
#include "robojs/net/drop_queue.hpp"
#include "robojs/net/revision_store.hpp"
#include "robojs/net/transport.hpp"

namespace httplib {
class Server;
}

namespace robojs::net {

/// Where the bridge gets robots from.
class Backend {
 public:
  using FrameListener = std::function<void(const sim::WorldState&)>;

  virtual ~Backend() = default;

  virtual std::unique_ptr<exec::IoPort> open_port(const std::string& session) = 0;
  virtual std::vector<std::string> scenario_names() = 0;
  /// Empty on success, otherwise an error message.
  virtual std::string load_scenario(const std::string& name,
                                    std::optional<std::uint32_t> seed) = 0;
  /// Name of the scenario last loaded through this backend.
  virtual std::string scenario_name() = 0;
  /// The current scenario, if it is known here.
  virtual std::optional<sim::ScenarioConfig> scenario() = 0;
  virtual int add_listener(FrameListener listener) = 0;
  virtual void remove_listener(int token) = 0;
};

/// An in-process field.
class LocalBackend : public Backend {
 public:
  LocalBackend(host::Field& field, std::string scenario_name);

  std::unique_ptr<exec::IoPort> open_port(const std::string& session) override;
  std::vector<std::string> scenario_names() override;
  std::string load_scenario(const std::string& name, std::optional<std::uint32_t> seed) override;
  std::string scenario_name() override;
  std::optional<sim::ScenarioConfig> scenario() override;
  int add_listener(FrameListener listener) override;
  void remove_listener(int token) override;

 private:
  host::Field& field_;
  std::mutex mutex_;
  std::string name_;
};

/// A guard server reached over datagrams.
class RemoteBackend : public Backend {
 public:
  explicit RemoteBackend(Ports ports, ClientConfig config = {});
  ~RemoteBackend() override;

  std::unique_ptr<exec::IoPort> open_port(const std::string& session) override;
  std::vector<std::string> scenario_names() override;
  std::string load_scenario(const std::string& name, std::optional<std::uint32_t> seed) override;
  std::string scenario_name() override;
  std::optional<sim::ScenarioConfig> scenario() override;
  int add_listener(FrameListener listener) override;
  void remove_listener(int token) override;

 private:
  void pump(std::stop_token stop);

  Ports ports_;
  ClientConfig config_;
  UdpTransport transport_;
  CommandClient control_;
  std::mutex mutex_;
  std::string name_;
  std::map<int, FrameListener> listeners_;
  int next_token_ = 1;
  std::jthread pump_;
};

struct BridgeConfig {
  std::filesystem::path static_dir;     // IDE bundle; not mounted when empty
  std::filesystem::path revisions_dir;  // revision store root
  std::size_t state_queue = 10;         // frames buffered per stream client
  std::string session = "ide";
};

/// HTTP front for the browser IDE: an event stream of state frames and run
/// output, JSON endpoints for run, stop, scenarios, REPL and saved files,
/// and static hosting.
class Bridge {
 public:
  Bridge(Backend& backend, BridgeConfig config);
  ~Bridge();

  Bridge(const Bridge&) = delete;
  Bridge& operator=(const Bridge&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port;
  /// returns the bound port, or -1.
  int listen(const std::string& host, int port);
  void stop();

  /// Stream clients currently connected.
  std::size_t clients();
  RevisionStore& revisions() { return store_; }

 private:
  struct Client {
    DropOldestQueue<std::string> states;
    DropOldestQueue<std::string> events{256};
    explicit Client(std::size_t n) : states(n) {}
  };

  void routes();
  void broadcast(const std::string& type, const std::string& data);
  void on_frame(const sim::WorldState& world);
  std::string scenario_event();
  /// Stops a running program and waits for its thread.
  void stop_run();

  Backend& backend_;
  BridgeConfig config_;
  RevisionStore store_;
  std::unique_ptr<httplib::Server> server_;
  std::jthread server_thread_;
  int listener_ = 0;

  std::mutex clients_mutex_;
  std::set<std::shared_ptr<Client>> clients_;

  std::mutex run_mutex_;
  std::unique_ptr<exec::IoPort> port_;
  api::RobotSession session_;
  std::unique_ptr<exec::Interpreter> interp_;
  std::uint64_t run_id_ = 0;
  bool busy_ = false;
  std::jthread run_thread_;
};

}  // namespace robojs::net
