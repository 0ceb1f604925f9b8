// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/envelope.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace robojs::net {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 6> kKinds = {"COMMAND", "STATE",    "ACK",
                                                    "REJECT",  "SCENARIO", "HALT"};

struct Bad : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json command_json(const CommandMsg& c) {
  json j;
  j["request_id"] = c.request_id;
  j["robot_id"] = c.robot_id;
  j["skill"] = std::string(to_string(c.skill));
  j["params"] = c.params;
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Bad(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j) {
  if (!j.is_number()) throw Bad("expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw Bad("non-finite number");
  return v;
}

std::uint64_t unsigned_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) throw Bad(std::string("'") + key + "' must be unsigned");
  return v.get<std::uint64_t>();
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw Bad(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw Bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

CommandMsg command_from(const json& j) {
  CommandMsg c;
  c.request_id = unsigned_field(j, "request_id");
  c.robot_id = int_field(j, "robot_id");
  auto skill = skill_from_string(string_field(j, "skill"));
  if (!skill) throw Bad("unknown skill");
  c.skill = *skill;
  const json& params = field(j, "params");
  if (!params.is_array()) throw Bad("'params' must be an array");
  for (const auto& p : params) c.params.push_back(number(p));
  if (static_cast<int>(c.params.size()) != skill_param_count(c.skill)) {
    throw Bad("wrong parameter count for " + std::string(to_string(c.skill)));
  }
  return c;
}

json state_json(const sim::WorldState& w) {
  json j;
  j["t"] = w.timestamp;
  j["frame"] = w.frame_seq;
  j["ball"] = {w.ball.x, w.ball.y, w.ball.vx, w.ball.vy};
  j["robots"] = json::array();
  for (const auto& r : w.robots) {
    j["robots"].push_back({r.id, r.x, r.y, r.theta, r.vx, r.vy, r.omega, r.available ? 1 : 0});
  }
  return j;
}

sim::WorldState state_from(const json& j) {
  sim::WorldState w;
  w.timestamp = number(field(j, "t"));
  w.frame_seq = unsigned_field(j, "frame");
  const json& b = field(j, "ball");
  if (!b.is_array() || b.size() != 4) throw Bad("'ball' must have 4 numbers");
  w.ball = {number(b[0]), number(b[1]), number(b[2]), number(b[3])};
  const json& robots = field(j, "robots");
  if (!robots.is_array()) throw Bad("'robots' must be an array");
  for (const auto& r : robots) {
    if (!r.is_array() || r.size() != 8 || !r[0].is_number_integer()) {
      throw Bad("robot entries have 8 fields");
    }
    sim::RobotState s;
    s.id = r[0].get<int>();
    s.x = number(r[1]);
    s.y = number(r[2]);
    s.theta = number(r[3]);
    s.vx = number(r[4]);
    s.vy = number(r[5]);
    s.omega = number(r[6]);
    s.available = number(r[7]) != 0;
    w.robots.push_back(s);
  }
  return w;
}

json scenario_json(const ScenarioMsg& s) {
  json j;
  j["op"] = s.op;
  j["request_id"] = s.request_id;
  if (!s.name.empty()) j["name"] = s.name;
  if (s.seed) j["seed"] = *s.seed;
  if (!s.names.empty()) j["names"] = s.names;
  if (!s.error.empty()) j["error"] = s.error;
  return j;
}

ScenarioMsg scenario_from(const json& j) {
  ScenarioMsg s;
  s.op = string_field(j, "op");
  s.request_id = unsigned_field(j, "request_id");
  if (j.contains("name")) s.name = string_field(j, "name");
  if (j.contains("seed")) {
    std::uint64_t seed = unsigned_field(j, "seed");
    if (seed > 0xffffffffu) throw Bad("seed out of range");
    s.seed = static_cast<std::uint32_t>(seed);
  }
  if (j.contains("names")) {
    for (const auto& n : field(j, "names")) {
      if (!n.is_string()) throw Bad("'names' must hold strings");
      s.names.push_back(n.get<std::string>());
    }
  }
  if (j.contains("error")) s.error = string_field(j, "error");
  return s;
}

}  // namespace

std::string_view to_string(Kind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

std::optional<Kind> kind_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    if (kKinds[i] == text) return static_cast<Kind>(i);
  }
  return std::nullopt;
}

std::string encode(const Envelope& e) {
  json j;
  j["kind"] = std::string(to_string(e.kind()));
  j["seq"] = e.seq;
  j["session"] = e.session;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CommandMsg>) {
          j["payload"] = command_json(p);
        } else if constexpr (std::is_same_v<T, sim::WorldState>) {
          j["payload"] = state_json(p);
        } else if constexpr (std::is_same_v<T, AckMsg>) {
          j["payload"] = {{"request_id", p.request_id}, {"applied", command_json(p.applied)}};
        } else if constexpr (std::is_same_v<T, RejectMsg>) {
          j["payload"] = {{"request_id", p.request_id}, {"reason", p.reason}};
        } else if constexpr (std::is_same_v<T, ScenarioMsg>) {
          j["payload"] = scenario_json(p);
        } else {
          j["payload"] = {{"robot_id", p.robot_id}, {"release", p.release}};
        }
      },
      e.payload);
  std::string out = j.dump() + "\n";
  if (out.size() > kMaxDatagram) {
    throw std::length_error("envelope of " + std::to_string(out.size()) + " bytes");
  }
  return out;
}

std::variant<Envelope, DecodeError> decode(std::string_view datagram) {
  if (datagram.size() > kMaxDatagram) return DecodeError{"datagram too large"};
  if (datagram.empty() || datagram.back() != '\n') return DecodeError{"missing line terminator"};
  datagram.remove_suffix(1);
  if (datagram.find('\n') != std::string_view::npos) return DecodeError{"more than one line"};
  try {
    json j = json::parse(datagram);
    if (!j.is_object()) throw Bad("envelope must be an object");
    Envelope e;
    auto kind = kind_from_string(string_field(j, "kind"));
    if (!kind) throw Bad("unknown kind");
    e.seq = unsigned_field(j, "seq");
    e.session = string_field(j, "session");
    const json& p = field(j, "payload");
    if (!p.is_object()) throw Bad("payload must be an object");
    switch (*kind) {
      case Kind::Command:
        e.payload = command_from(p);
        break;
      case Kind::State:
        e.payload = state_from(p);
        break;
      case Kind::Ack:
        e.payload = AckMsg{unsigned_field(p, "request_id"), command_from(field(p, "applied"))};
        break;
      case Kind::Reject:
        e.payload = RejectMsg{unsigned_field(p, "request_id"), string_field(p, "reason")};
        break;
      case Kind::Scenario:
        e.payload = scenario_from(p);
        break;
      case Kind::Halt: {
        const json& rel = field(p, "release");
        if (!rel.is_boolean()) throw Bad("'release' must be a boolean");
        e.payload = HaltMsg{int_field(p, "robot_id"), rel.get<bool>()};
        break;
      }
    }
    return e;
  } catch (const Bad& b) {
    return DecodeError{b.what()};
  } catch (const json::exception& x) {
    return DecodeError{x.what()};
  }
}

std::string state_to_json(const sim::WorldState& world) { return state_json(world).dump(); }

}  // namespace robojs::net
