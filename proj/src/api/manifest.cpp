// SPDX-License-Identifier: Apache-2.0
#include "robojs/api/manifest.hpp"

#include <stdexcept>

#include "json.hpp"

namespace robojs::api {

namespace {

ApiEntry entry(std::string name, Layer layer, std::vector<std::string> params,
               std::string doc, ResultKind result = ResultKind::None) {
  ApiEntry e;
  e.name = std::move(name);
  e.arity = static_cast<int>(params.size());
  e.layer = layer;
  e.result = result;
  e.params = std::move(params);
  e.doc = std::move(doc);
  return e;
}

ApiManifest build_catalog() {
  using L = Layer;
  constexpr auto N = ResultKind::Number;
  ApiManifest m;
  m.entries = {
      entry("setRobotId", L::Setup, {"id"}, "Select the robot this program controls."),
      entry("moveForward", L::Beginner, {}, "Move one grid cell in the facing direction."),
      entry("turnLeft", L::Beginner, {}, "Turn 90 degrees counter-clockwise."),
      entry("turnRight", L::Beginner, {}, "Turn 90 degrees clockwise."),
      entry("moveByXCells", L::Intermediate, {"cells"}, "Move along x by whole grid cells."),
      entry("moveByYCells", L::Intermediate, {"cells"}, "Move along y by whole grid cells."),
      entry("moveByX", L::Advanced, {"dx"}, "Move along x by dx meters."),
      entry("moveByY", L::Advanced, {"dy"}, "Move along y by dy meters."),
      entry("moveByXY", L::Advanced, {"dx", "dy"}, "Move by (dx, dy) meters."),
      entry("turnBy", L::Advanced, {"degrees"}, "Turn by a relative angle."),
      entry("moveBy", L::Advanced, {"dx", "dy", "degrees"}, "Move and turn relative to the current pose."),
      entry("moveToX", L::Advanced, {"x"}, "Move to an absolute x, keeping y."),
      entry("moveToY", L::Advanced, {"y"}, "Move to an absolute y, keeping x."),
      entry("moveToXY", L::Advanced, {"x", "y"}, "Move to an absolute position."),
      entry("turnTo", L::Advanced, {"degrees"}, "Turn to an absolute heading."),
      entry("moveTo", L::Advanced, {"x", "y", "degrees"}, "Move to an absolute pose."),
      entry("kick", L::Skill, {"power"}, "Kick the ball; power is between 0 and 1."),
      entry("dribble", L::Skill, {"on"}, "Switch the dribbler on or off."),
      entry("catchBall", L::Skill, {}, "Drive to the ball and take control of it."),
      entry("block", L::Skill, {}, "Move between the ball and the own goal."),
      entry("getPosX", L::Sense, {}, "Robot x in meters.", N),
      entry("getPosY", L::Sense, {}, "Robot y in meters.", N),
      entry("getAngle", L::Sense, {}, "Robot heading in degrees.", N),
      entry("getBallPosX", L::Sense, {}, "Ball x in meters.", N),
      entry("getBallPosY", L::Sense, {}, "Ball y in meters.", N),
      entry("getBallVelX", L::Sense, {}, "Ball x velocity in m/s.", N),
      entry("getBallVelY", L::Sense, {}, "Ball y velocity in m/s.", N),
  };
  return m;
}

}  // namespace

const ApiEntry* ApiManifest::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const ApiManifest& api_catalog() {
  static const ApiManifest catalog = build_catalog();
  return catalog;
}

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::Setup: return "setup";
    case Layer::Beginner: return "beginner";
    case Layer::Intermediate: return "intermediate";
    case Layer::Advanced: return "advanced";
    case Layer::Skill: return "skill";
    case Layer::Sense: return "sense";
  }
  return "advanced";
}

std::optional<Layer> layer_from_string(std::string_view text) {
  for (Layer l : {Layer::Setup, Layer::Beginner, Layer::Intermediate,
                  Layer::Advanced, Layer::Skill, Layer::Sense}) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

std::string manifest_to_json(const ApiManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["namespace"] = "robot";
  auto& list = doc["functions"] = nlohmann::ordered_json::array();
  for (const auto& e : manifest.entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["arity"] = e.arity;
    j["layer"] = to_string(e.layer);
    j["result"] = e.result == ResultKind::Number ? "number" : "none";
    j["params"] = e.params;
    j["doc"] = e.doc;
    list.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

ApiManifest manifest_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("manifest: ") + e.what());
  }
  if (!doc.contains("functions") || !doc["functions"].is_array()) {
    throw std::runtime_error("manifest: missing \"functions\" array");
  }
  ApiManifest m;
  for (const auto& j : doc["functions"]) {
    ApiEntry e;
    e.name = j.at("name").get<std::string>();
    e.arity = j.at("arity").get<int>();
    auto layer = layer_from_string(j.value("layer", "advanced"));
    if (!layer) throw std::runtime_error("manifest: unknown layer for " + e.name);
    e.layer = *layer;
    e.result = j.value("result", "none") == "number" ? ResultKind::Number
                                                     : ResultKind::None;
    e.params = j.value("params", std::vector<std::string>{});
    e.doc = j.value("doc", "");
    if (e.arity < 0) throw std::runtime_error("manifest: negative arity for " + e.name);
    m.entries.push_back(std::move(e));
  }
  return m;
}

}  // namespace robojs::api
