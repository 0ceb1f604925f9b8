// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <thread>

#include "doctest.h"
#include "field_run.hpp"
#include "robojs/net/client.hpp"
#include "robojs/net/envelope.hpp"
#include "robojs/net/server.hpp"

using namespace robojs;
using namespace robojs::net;

namespace {

Envelope random_envelope(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> small(0, 9);
  Envelope e;
  e.seq = rng();
  e.session = "s" + std::to_string(rng() % 1000);
  auto command = [&] {
    CommandMsg c;
    c.robot_id = small(rng);
    c.skill = static_cast<Skill>(rng() % 8);
    for (int i = 0; i < skill_param_count(c.skill); ++i) c.params.push_back(u(rng) / 7);
    c.request_id = rng();
    return c;
  };
  switch (rng() % 6) {
    case 0:
      e.payload = command();
      break;
    case 1: {
      sim::WorldState w;
      w.timestamp = std::abs(u(rng));
      w.frame_seq = rng();
      w.ball = {u(rng), u(rng), u(rng), u(rng)};
      for (int i = 0, n = small(rng) % 5; i < n; ++i) {
        sim::RobotState r;
        r.id = i;
        r.x = u(rng) / 3;
        r.y = u(rng) / 3;
        r.theta = u(rng) / 6;
        r.vx = u(rng) / 1000;
        r.vy = u(rng) / 1000;
        r.omega = u(rng);
        r.available = rng() % 2;
        w.robots.push_back(r);
      }
      e.payload = w;
      break;
    }
    case 2:
      e.payload = AckMsg{rng(), command()};
      break;
    case 3:
      e.payload = RejectMsg{rng(), "kick-not-applicable"};
      break;
    case 4: {
      ScenarioMsg s;
      s.op = rng() % 2 ? "load" : "names";
      s.request_id = rng();
      s.name = "maze";
      if (rng() % 2) s.seed = rng();
      if (s.op == "names") s.names = {"maze", "tag"};
      e.payload = s;
      break;
    }
    default:
      e.payload = HaltMsg{small(rng), rng() % 2 == 0};
  }
  return e;
}

sim::ScenarioConfig pair_scenario() {
  sim::ScenarioConfig c;
  c.name = "pair";
  c.robots = {{0, -1, 0, 0}, {1, 1, 0, 180}};
  c.ball = {0, 0.8};
  return c;
}

/// Field, guard server and sockets on loopback.
struct Rig {
  host::Field field{pair_scenario()};
  UdpTransport command_socket{0, "127.0.0.1"};
  UdpTransport state_socket{0, "127.0.0.1"};
  GuardServer server{field, command_socket, state_socket};

  Rig() { server.start(); }
  Endpoint guard() const { return command_socket.local_endpoint(); }
  Endpoint state() const { return state_socket.local_endpoint(); }
};

}  // namespace

TEST_CASE("every envelope kind round-trips") {
  std::mt19937 rng(3);
  int kinds[6] = {};
  for (int i = 0; i < 2000; ++i) {
    Envelope e = random_envelope(rng);
    ++kinds[static_cast<int>(e.kind())];
    std::string bytes = encode(e);
    CHECK(bytes.back() == '\n');
    CHECK(std::count(bytes.begin(), bytes.end(), '\n') == 1);
    auto back = decode(bytes);
    REQUIRE(std::holds_alternative<Envelope>(back));
    CHECK(std::get<Envelope>(back) == e);
  }
  for (int k : kinds) CHECK(k > 0);
}

TEST_CASE("command envelope example") {
  Envelope e{7, "abc", CommandMsg{0, Skill::MoveTo, {1.0, 0.5, 90}, 12}};
  CHECK(encode(e) ==
        "{\"kind\":\"COMMAND\",\"seq\":7,\"session\":\"abc\",\"payload\":{\"request_id\":12,"
        "\"robot_id\":0,\"skill\":\"MOVE_TO\",\"params\":[1.0,0.5,90.0]}}\n");
}

TEST_CASE("malformed datagrams are decode errors") {
  Envelope e{1, "abc", CommandMsg{0, Skill::MoveTo, {1.0, 0.5, 90}, 12}};
  std::string bytes = encode(e);
  for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
    CHECK(std::holds_alternative<DecodeError>(decode(bytes.substr(0, cut))));
  }
  CHECK(std::holds_alternative<DecodeError>(decode("{\"kind\":\"NOPE\"}\n")));
  CHECK(std::holds_alternative<DecodeError>(
      decode("{\"kind\":\"COMMAND\",\"seq\":1,\"session\":\"a\",\"payload\":{\"request_id\":1,"
             "\"robot_id\":0,\"skill\":\"MOVE_TO\",\"params\":[1]}}\n")));
}

TEST_CASE("state with four robots fits one datagram") {
  sim::WorldState w;
  w.timestamp = 12345.678901234567;
  w.frame_seq = 0xffffffffffffull;
  w.ball = {-1.2345678901234567, 1.1234567890123456, -0.12345678901234567, 0.9876543210987654};
  for (int i = 0; i < 4; ++i) {
    w.robots.push_back({i, -1.7123456789012345, -1.1098765432109876, -179.12345678901234,
                        -0.70710678118654757, -0.70710678118654757, -359.99999999999994, true});
  }
  std::string bytes = encode({0xffffffffull, "session-0123456789abcdef", w});
  MESSAGE("four-robot STATE: " << bytes.size() << " bytes");
  CHECK(bytes.size() <= kMaxDatagram);
  w.robots.resize(40, w.robots[0]);
  CHECK_THROWS_AS(encode({1, "s", w}), std::length_error);
}

TEST_CASE("commands are acknowledged over loopback") {
  Rig rig;
  UdpTransport socket(0, "127.0.0.1");
  CommandClient client(socket, rig.guard(), "a");
  auto r = client.request({0, Skill::MoveTo, {5, 0, 0}, 1});
  REQUIRE(r.status == CommandResult::Status::Ack);
  CHECK(r.applied.params[0] == doctest::Approx(1.71));
  r = client.request({0, Skill::Kick, {1}, 2});
  CHECK(r.status == CommandResult::Status::Reject);
  CHECK(r.reason == "kick-not-applicable");
}

TEST_CASE("duplicate delivery changes state once") {
  Rig rig;
  UdpTransport socket(0, "127.0.0.1");
  std::string bytes = encode({1, "dup", CommandMsg{0, Skill::MoveTo, {0, 0, 0}, 9}});
  socket.send(rig.guard(), bytes);
  socket.send(rig.guard(), bytes);
  int replies = 0;
  while (auto d = socket.receive(0.5)) {
    auto e = decode(d->data);
    REQUIRE(std::holds_alternative<Envelope>(e));
    CHECK(std::holds_alternative<AckMsg>(std::get<Envelope>(e).payload));
    if (++replies == 2) break;
  }
  CHECK(replies == 2);
  CHECK(rig.server.stats().commands == 1);
  CHECK(rig.server.stats().duplicates == 1);
}

TEST_CASE("commands survive 20% loss each way") {
  Rig rig;
  UdpTransport socket(0, "127.0.0.1");
  LossyTransport lossy(socket, 0.2, 0.2, 42);
  CommandClient client(lossy, rig.guard(), "lossy");
  int attempts = 0;
  for (std::uint64_t i = 1; i <= 50; ++i) {
    auto r = client.request({0, Skill::TurnTo, {static_cast<double>(i)}, i});
    CHECK(r.status == CommandResult::Status::Ack);
    attempts += r.attempts;
  }
  CHECK(rig.server.stats().commands == 50);
  CHECK(lossy.dropped() > 0);
  MESSAGE("attempts per command " << attempts / 50.0);
}

TEST_CASE("a missing guard times out after two seconds") {
  UdpTransport dead(0, "127.0.0.1");
  Endpoint nowhere = dead.local_endpoint();
  UdpTransport socket(0, "127.0.0.1");
  CommandClient client(socket, nowhere, "a");
  double t0 = monotonic_seconds();
  auto r = client.request({0, Skill::Halt, {}, 1});
  double took = monotonic_seconds() - t0;
  CHECK(r.status == CommandResult::Status::Timeout);
  CHECK(took == doctest::Approx(2.0).epsilon(0.1));
  CHECK(r.attempts >= 15);
}

TEST_CASE("subscribers receive identical frames") {
  Rig rig;
  UdpTransport s1(0, "127.0.0.1"), s2(0, "127.0.0.1");
  CommandClient c1(s1, rig.guard(), "v1"), c2(s2, rig.guard(), "v2");
  c1.subscribe(rig.state());
  c2.subscribe(rig.state());
  for (int i = 0; i < 50 && rig.server.subscribers() < 2; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  REQUIRE(rig.server.subscribers() == 2);
  for (int i = 0; i < 5; ++i) rig.field.tick();
  REQUIRE(c1.wait_state(4, 1.0, {}));
  REQUIRE(c2.wait_state(4, 1.0, {}));
  CHECK(c1.latest_state()->state == c2.latest_state()->state);
  CHECK(c1.latest_state()->state == rig.field.world());
}

TEST_CASE("halt envelope stops the robot and releases it") {
  Rig rig;
  UdpTransport socket(0, "127.0.0.1");
  CommandClient a(socket, rig.guard(), "a");
  REQUIRE(a.request({0, Skill::MoveTo, {1.5, 0.5, 0}, 1}).status == CommandResult::Status::Ack);
  for (int i = 0; i < 30; ++i) rig.field.tick();
  CHECK(rig.field.world().robot(0)->vx > 0);
  a.send_halt(0, true);
  for (int i = 0; i < 100 && rig.server.stats().halts == 0; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  rig.field.tick();
  CHECK(rig.field.world().robot(0)->vx == 0);
  UdpTransport other(0, "127.0.0.1");
  CommandClient b(other, rig.guard(), "b");
  CHECK(b.request({0, Skill::SetId, {}, 1}).status == CommandResult::Status::Ack);
}

TEST_CASE("scenario list and load over the command port") {
  Rig rig;
  UdpTransport socket(0, "127.0.0.1");
  CommandClient client(socket, rig.guard(), "ide");
  ScenarioMsg list;
  list.op = "list";
  auto names = client.scenario_request(list);
  REQUIRE(names);
  CHECK(std::count(names->names.begin(), names->names.end(), "penalty") == 1);
  ScenarioMsg load;
  load.op = "load";
  load.name = "penalty";
  auto loaded = client.scenario_request(load);
  REQUIRE(loaded);
  CHECK(loaded->op == "loaded");
  CHECK(rig.field.scenario().name == "penalty");
  load.name = "nope";
  auto bad = client.scenario_request(load);
  REQUIRE(bad);
  CHECK(bad->op == "error");
}

TEST_CASE("a program drives a remote field") {
  Rig rig;
  rig.field.start(1.0);
  UdpTransport socket(0, "127.0.0.1");
  CommandClient client(socket, rig.guard(), "prog");
  client.subscribe(rig.state());
  REQUIRE(client.wait_state(0, 2.0, {}));
  NetworkPort port(client);
  api::RobotSession session;
  exec::Interpreter interp;
  api::install_robot_api(interp, port, session);
  auto out = interp.run(testing::parse_ok(
      "robot.setRobotId(0);\nrobot.moveByX(0.3);\nconsole.log(robot.getPosX());\n"));
  rig.field.stop();
  REQUIRE(out.status == exec::ExecStatus::Completed);
  CHECK(std::abs(std::stod(out.printed_output.at(0)) - (-0.7)) <= 0.02);
}
