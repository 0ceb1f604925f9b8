// SPDX-License-Identifier: Apache-2.0
#include "robojs/api/robot_api.hpp"

#include <cmath>
#include <functional>
#include <memory>

#include "robojs/api/manifest.hpp"

namespace robojs::api {

using exec::IoReply;
using exec::IoRequest;
using exec::Value;
using exec::WorldSnapshot;
using lang::Category;
using net::Skill;

ApiConfig api_config_for(const sim::ScenarioConfig& scenario) {
  ApiConfig config;
  config.grid = GridMap(scenario.cell_size, 1.8, 1.2);
  for (const auto& w : scenario.walls) config.grid.add_wall({w.ax, w.ay}, {w.bx, w.by});
  return config;
}

double normalize_degrees(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

ApiError no_robot() {
  return {Category::NoRobotSelected,
          "No robot selected; call robot.setRobotId(n) before moving or sensing."};
}

ApiError no_vision() {
  return {Category::NoVisionData, "No vision data: the robot's position is not known."};
}

bool fresh(const std::optional<WorldSnapshot>& world, double now, const ApiConfig& config) {
  return world && now - world->received_at <= config.stale_after;
}

double snap90(double degrees) { return normalize_degrees(std::round(degrees / 90.0) * 90.0); }

IoRequest request(RobotSession& session, std::string_view api_name, Skill skill,
                  std::vector<double> params, int robot_id) {
  IoRequest r;
  r.request_id = session.take_request_id();
  r.api_name = std::string(api_name);
  r.command.robot_id = robot_id;
  r.command.skill = skill;
  r.command.params = std::move(params);
  r.command.request_id = r.request_id;
  return r;
}

}  // namespace

std::variant<IoRequest, ApiError> to_request(std::string_view name,
                                             const std::vector<double>& args,
                                             RobotSession& session,
                                             const std::optional<WorldSnapshot>& world,
                                             double now, const ApiConfig& config) {
  auto arg = [&](std::size_t i) { return i < args.size() ? args[i] : 0.0; };
  if (name == "setRobotId") {
    return request(session, name, Skill::SetId, {}, static_cast<int>(arg(0)));
  }
  if (!session.robot_id) return no_robot();
  int id = *session.robot_id;

  if (name == "kick") return request(session, name, Skill::Kick, {arg(0)}, id);
  if (name == "dribble") {
    return request(session, name, Skill::Dribble, {arg(0) != 0 ? 1.0 : 0.0}, id);
  }
  if (name == "catchBall") return request(session, name, Skill::Catch, {}, id);
  if (name == "block") return request(session, name, Skill::Block, {}, id);

  // everything else moves relative to, or keeps part of, the current pose
  if (!fresh(world, now, config)) return no_vision();
  const sim::RobotState* self = world->state.robot(id);
  if (!self) return no_vision();
  const double x = self->x;
  const double y = self->y;
  const double theta = self->theta;
  const GridMap& grid = config.grid;

  auto move_to = [&](double tx, double ty, double ttheta) {
    return request(session, name, Skill::MoveTo, {tx, ty, normalize_degrees(ttheta)}, id);
  };
  auto turn_to = [&](double ttheta) {
    return request(session, name, Skill::TurnTo, {normalize_degrees(ttheta)}, id);
  };
  auto move_cells = [&](int dx, int dy, int n, double heading) {
    Cell to = grid.step(grid.cell_of(x, y), dx, dy, n);
    return move_to(grid.center_x(to), grid.center_y(to), heading);
  };
  auto cells = [](double n) { return static_cast<int>(std::trunc(n)); };

  if (name == "moveForward") {
    double heading = snap90(theta);
    double rad = heading * kPi / 180.0;
    int dx = static_cast<int>(std::lround(std::cos(rad)));
    int dy = static_cast<int>(std::lround(std::sin(rad)));
    return move_cells(dx, dy, 1, heading);
  }
  if (name == "turnLeft") return turn_to(snap90(theta) + 90.0);
  if (name == "turnRight") return turn_to(snap90(theta) - 90.0);
  if (name == "moveByXCells") {
    int n = cells(arg(0));
    return move_cells(n < 0 ? -1 : 1, 0, std::abs(n), theta);
  }
  if (name == "moveByYCells") {
    int n = cells(arg(0));
    return move_cells(0, n < 0 ? -1 : 1, std::abs(n), theta);
  }
  if (name == "moveByX") return move_to(x + arg(0), y, theta);
  if (name == "moveByY") return move_to(x, y + arg(0), theta);
  if (name == "moveByXY") return move_to(x + arg(0), y + arg(1), theta);
  if (name == "turnBy") return turn_to(theta + arg(0));
  if (name == "moveBy") return move_to(x + arg(0), y + arg(1), theta + arg(2));
  if (name == "moveToX") return move_to(arg(0), y, theta);
  if (name == "moveToY") return move_to(x, arg(0), theta);
  if (name == "moveToXY") return move_to(arg(0), arg(1), theta);
  if (name == "turnTo") return turn_to(arg(0));
  if (name == "moveTo") return move_to(arg(0), arg(1), arg(2));
  return ApiError{Category::MissingMember, "robot." + std::string(name) + " is not a command."};
}

std::variant<double, ApiError> sense(std::string_view name,
                                     const std::optional<WorldSnapshot>& world, double now,
                                     const RobotSession& session, const ApiConfig& config) {
  bool ball = name.starts_with("getBall");
  if (!ball && !session.robot_id) return no_robot();
  if (!fresh(world, now, config)) return no_vision();
  const auto& w = world->state;
  if (name == "getBallPosX") return w.ball.x;
  if (name == "getBallPosY") return w.ball.y;
  if (name == "getBallVelX") return w.ball.vx;
  if (name == "getBallVelY") return w.ball.vy;
  const sim::RobotState* self = w.robot(*session.robot_id);
  if (!self) return no_vision();
  if (name == "getPosX") return self->x;
  if (name == "getPosY") return self->y;
  if (name == "getAngle") return self->theta;
  return ApiError{Category::MissingMember, "robot." + std::string(name) + " is not a sensor."};
}

// --- runtime binding --------------------------------------------------------

namespace {

[[noreturn]] void raise(const ApiError& e, const lang::SourceSpan& span) {
  throw exec::RuntimeError{lang::Diagnostic{lang::Phase::Dynamic, e.category, e.message, span}};
}

class Binding {
 public:
  Binding(exec::IoPort& port, RobotSession& session, ApiConfig config)
      : port_(port), session_(session), config_(std::move(config)) {}

  Value call(const ApiEntry& entry, exec::CallContext& ctx, std::vector<Value>& args) {
    std::vector<double> numbers;
    for (std::size_t i = 0; i < args.size(); ++i) {
      numbers.push_back(number_arg(entry, args[i], i, ctx.span));
    }
    if (entry.layer == Layer::Sense) {
      auto v = sense(entry.name, port_.world(), port_.now(), session_, config_);
      if (auto* e = std::get_if<ApiError>(&v)) raise(*e, ctx.span);
      return std::get<double>(v);
    }
    auto r = to_request(entry.name, numbers, session_, port_.world(), port_.now(), config_);
    if (auto* e = std::get_if<ApiError>(&r)) raise(*e, ctx.span);
    IoRequest req = std::get<IoRequest>(std::move(r));
    IoReply reply = exchange(ctx, req);
    switch (req.command.skill) {
      case Skill::SetId:
        session_.robot_id = req.command.robot_id;
        break;
      case Skill::MoveTo:
      case Skill::TurnTo:
      case Skill::Catch:
      case Skill::Block:
        wait_for_completion(ctx, req, reply.applied);
        break;
      default:
        break;
    }
    return exec::Undefined{};
  }

  void halt() {
    if (session_.robot_id) port_.halt(*session_.robot_id);
  }

 private:
  double number_arg(const ApiEntry& entry, const Value& v, std::size_t i,
                    const lang::SourceSpan& span) {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (entry.name == "dribble") {
      if (const auto* b = std::get_if<bool>(&v)) return *b ? 1.0 : 0.0;
    }
    std::string param = i < entry.params.size() ? entry.params[i] : "argument";
    raise({Category::OpTypeMismatch, "robot." + entry.name + " expects a number for \"" +
                                         param + "\" but got " + exec::describe_value(v) + "."},
          span);
  }

  /// Submits and waits for the reply; failures become diagnostics.
  IoReply exchange(exec::CallContext& ctx, const IoRequest& req) {
    auto& interp = ctx.interp;
    if (!interp.dispatch([&] { port_.submit(req); })) throw exec::StopRequested{};
    IoReply reply = port_.await(req.request_id, interp.stop_token());
    switch (reply.status) {
      case IoReply::Status::Ack:
        return reply;
      case IoReply::Status::Cancelled:
        throw exec::StopRequested{};
      case IoReply::Status::Timeout:
        raise({Category::TransportTimeout,
               "robot." + req.api_name + " got no answer from the robot server."},
              ctx.span);
      case IoReply::Status::Reject:
        break;
    }
    raise({Category::CommandRejected, rejection_message(req, reply.reason)}, ctx.span);
  }

  static std::string rejection_message(const IoRequest& req, const std::string& reason) {
    std::string call = "robot." + req.api_name;
    int id = req.command.robot_id;
    if (reason == net::reason::kKickNotApplicable) {
      return call + " was refused: the ball is too far away or not in front of the robot.";
    }
    if (reason == net::reason::kRobotUnavailable) {
      return call + " was refused: robot " + std::to_string(id) + " is not available.";
    }
    if (reason == net::reason::kUnknownRobot) {
      return call + " was refused: there is no robot " + std::to_string(id) + ".";
    }
    return call + " was refused (" + reason + ").";
  }

  bool done(const net::CommandMsg& target) {
    auto w = port_.world();
    if (!w) return false;
    const sim::RobotState* self = w->state.robot(target.robot_id);
    if (!self) return false;
    auto heading_ok = [&](double want) {
      return std::abs(normalize_degrees(self->theta - want)) <= config_.angle_tolerance;
    };
    switch (target.skill) {
      case Skill::MoveTo:
        return std::hypot(self->x - target.params[0], self->y - target.params[1]) <=
                   config_.position_tolerance &&
               heading_ok(target.params[2]);
      case Skill::TurnTo:
        return heading_ok(target.params[0]);
      default:
        return std::hypot(self->x - w->state.ball.x, self->y - w->state.ball.y) <=
               config_.contact_distance;
    }
  }

  void wait_for_completion(exec::CallContext& ctx, const IoRequest& req,
                           const net::CommandMsg& applied) {
    auto& interp = ctx.interp;
    const double start = port_.now();
    double last_sent = start;
    while (!done(applied)) {
      double now = port_.now();
      if (now - start >= config_.motion_deadline) return;
      if (now - last_sent >= config_.keepalive) {
        IoRequest again = req;
        again.request_id = session_.take_request_id();
        again.command.request_id = again.request_id;
        exchange(ctx, again);
        last_sent = port_.now();
      }
      port_.wait_frame(config_.keepalive, interp.stop_token());
      if (interp.stop_token().stop_requested()) throw exec::StopRequested{};
    }
  }

  exec::IoPort& port_;
  RobotSession& session_;
  ApiConfig config_;
};

}  // namespace

void install_robot_api(exec::Interpreter& interp, exec::IoPort& port, RobotSession& session,
                       ApiConfig config) {
  auto binding = std::make_shared<Binding>(port, session, std::move(config));
  std::vector<exec::FunctionRef> members;
  for (const auto& entry : api_catalog().entries) {
    members.push_back(exec::make_native(
        "robot", entry.name, entry.arity,
        [binding, &entry](exec::CallContext& ctx, std::vector<Value>& args) -> Value {
          return binding->call(entry, ctx, args);
        }));
  }
  interp.add_namespace("robot", std::move(members));
  interp.add_halt_hook([binding] { binding->halt(); });
}

}  // namespace robojs::api
