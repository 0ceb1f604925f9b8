// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "robojs/api/manifest.hpp"
#include "robojs/lang/ast.hpp"

namespace robojs::check {

/// Declared parameter counts of every callable the checker knows about.
struct ArityTable {
  std::map<std::string, int> builtins;  // qualified, e.g. "robot.moveTo"
  std::set<std::string> variadic;       // natives exempt from arity checks
  std::map<const lang::FunctionDecl*, int> user;

  /// Builtins from the robot manifest plus console.log.
  static ArityTable from_manifest(const api::ApiManifest& manifest);
  static const ArityTable& standard();

  /// Adds every function declaration of `program`.
  void add_program(const lang::Program& program);

  bool has_member(std::string_view ns, std::string_view name) const;
  /// nullopt for unknown or variadic members.
  std::optional<int> builtin_arity(std::string_view ns,
                                   std::string_view name) const;
};

std::string qualified(std::string_view ns, std::string_view name);

}  // namespace robojs::check
