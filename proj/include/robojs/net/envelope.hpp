// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "robojs/net/command.hpp"
#include "robojs/sim/world_state.hpp"

namespace robojs::net {

inline constexpr std::size_t kMaxDatagram = 1400;

enum class Kind { Command, State, Ack, Reject, Scenario, Halt };

std::string_view to_string(Kind kind);
std::optional<Kind> kind_from_string(std::string_view text);

struct AckMsg {
  std::uint64_t request_id = 0;
  CommandMsg applied;  // command as admitted, targets truncated
  bool operator==(const AckMsg&) const = default;
};

struct RejectMsg {
  std::uint64_t request_id = 0;
  std::string reason;
  bool operator==(const RejectMsg&) const = default;
};

/// Scenario control and state subscription. Ops: "subscribe" (to the state
/// port), "load", "list", and the replies "loaded", "names", "error".
struct ScenarioMsg {
  std::string op;
  std::uint64_t request_id = 0;
  std::string name;
  std::optional<std::uint32_t> seed;
  std::vector<std::string> names;
  std::string error;
  bool operator==(const ScenarioMsg&) const = default;
};

/// Stop a robot now; `release` also gives up the session's claim on it.
struct HaltMsg {
  int robot_id = 0;
  bool release = true;
  bool operator==(const HaltMsg&) const = default;
};

using Payload = std::variant<CommandMsg, sim::WorldState, AckMsg, RejectMsg, ScenarioMsg, HaltMsg>;

struct Envelope {
  std::uint64_t seq = 0;
  std::string session;
  Payload payload;

  Kind kind() const { return static_cast<Kind>(payload.index()); }
  bool operator==(const Envelope&) const = default;
};

struct DecodeError {
  std::string message;
};

/// One line of JSON ending in '\n'. Throws std::length_error past
/// kMaxDatagram bytes.
std::string encode(const Envelope& envelope);
std::variant<Envelope, DecodeError> decode(std::string_view datagram);

/// The STATE payload alone, as compact JSON.
std::string state_to_json(const sim::WorldState& world);

/// Per-(session, kind) sequence numbers for one sender.
class Sequencer {
 public:
  std::uint64_t next(Kind kind) { return ++counters_[static_cast<std::size_t>(kind)]; }

 private:
  std::uint64_t counters_[6] = {};
};

}  // namespace robojs::net
