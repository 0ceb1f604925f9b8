// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace robojs::api {

enum class Layer { Setup, Beginner, Intermediate, Advanced, Skill, Sense };
enum class ResultKind { None, Number };

struct ApiEntry {
  std::string name;  // unqualified, e.g. "moveTo"
  int arity = 0;
  Layer layer = Layer::Advanced;
  ResultKind result = ResultKind::None;
  std::vector<std::string> params;
  std::string doc;
};

struct ApiManifest {
  std::vector<ApiEntry> entries;

  const ApiEntry* find(std::string_view name) const;
};

/// The robot namespace as shipped.
const ApiManifest& api_catalog();

std::string_view to_string(Layer layer);
std::optional<Layer> layer_from_string(std::string_view text);

/// Machine-readable document for the IDE and for --manifest overrides.
std::string manifest_to_json(const ApiManifest& manifest);
/// Throws std::runtime_error on malformed input.
ApiManifest manifest_from_json(std::string_view text);

}  // namespace robojs::api
