// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robojs/lang/source_span.hpp"

namespace robojs::lang {

enum class Phase { Syntax, Static, Dynamic };

/// Every error kind the toolchain reports. The check categories double as
/// the pitfall taxonomy; the rest are syntax and runtime failures.
enum class Category {
  // syntax
  UnterminatedString,
  IllegalCharacter,
  UnexpectedToken,
  MismatchedBracket,
  ElseWithCondition,
  Redeclaration,
  NotInRoboJS,
  MissingSemicolon,
  InvalidDeclaration,
  // pitfall checks
  LooseComparison,
  UninitializedVariable,
  ConditionalAssignment,
  OpTypeMismatch,
  ArityMismatch,
  MissingMember,
  NonBooleanCondition,
  FunctionComparedAsValue,
  // runtime
  UndeclaredVariable,
  NotAFunction,
  CallDepthExceeded,
  NoRobotSelected,
  NoVisionData,
  CommandRejected,
  TransportTimeout,
};

std::string_view to_string(Phase phase);
std::string_view to_string(Category category);
std::optional<Category> category_from_string(std::string_view name);

struct Diagnostic {
  Phase phase = Phase::Syntax;
  Category category = Category::UnexpectedToken;
  std::string message;
  SourceSpan span;

  bool operator==(const Diagnostic&) const = default;
};

/// `file:line:col: phase/category: message`
std::string format_diagnostic(const Diagnostic& diagnostic);

using Diagnostics = std::vector<Diagnostic>;

}  // namespace robojs::lang
