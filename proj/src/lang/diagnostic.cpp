// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/diagnostic.hpp"

#include <array>
#include <utility>

namespace robojs::lang {

namespace {

constexpr std::array kCategoryNames = {
    std::pair{Category::UnterminatedString, "UnterminatedString"},
    std::pair{Category::IllegalCharacter, "IllegalCharacter"},
    std::pair{Category::UnexpectedToken, "UnexpectedToken"},
    std::pair{Category::MismatchedBracket, "MismatchedBracket"},
    std::pair{Category::ElseWithCondition, "ElseWithCondition"},
    std::pair{Category::Redeclaration, "Redeclaration"},
    std::pair{Category::NotInRoboJS, "NotInRoboJS"},
    std::pair{Category::MissingSemicolon, "MissingSemicolon"},
    std::pair{Category::InvalidDeclaration, "InvalidDeclaration"},
    std::pair{Category::LooseComparison, "LooseComparison"},
    std::pair{Category::UninitializedVariable, "UninitializedVariable"},
    std::pair{Category::ConditionalAssignment, "ConditionalAssignment"},
    std::pair{Category::OpTypeMismatch, "OpTypeMismatch"},
    std::pair{Category::ArityMismatch, "ArityMismatch"},
    std::pair{Category::MissingMember, "MissingMember"},
    std::pair{Category::NonBooleanCondition, "NonBooleanCondition"},
    std::pair{Category::FunctionComparedAsValue, "FunctionComparedAsValue"},
    std::pair{Category::UndeclaredVariable, "UndeclaredVariable"},
    std::pair{Category::NotAFunction, "NotAFunction"},
    std::pair{Category::CallDepthExceeded, "CallDepthExceeded"},
    std::pair{Category::NoRobotSelected, "NoRobotSelected"},
    std::pair{Category::NoVisionData, "NoVisionData"},
    std::pair{Category::CommandRejected, "CommandRejected"},
    std::pair{Category::TransportTimeout, "TransportTimeout"},
};

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Syntax:
      return "syntax";
    case Phase::Static:
      return "static";
    case Phase::Dynamic:
      return "dynamic";
  }
  return "?";
}

std::string_view to_string(Category category) {
  for (const auto& [value, name] : kCategoryNames) {
    if (value == category) return name;
  }
  return "?";
}

std::optional<Category> category_from_string(std::string_view name) {
  for (const auto& [value, text] : kCategoryNames) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.span.file_id.empty() ? "<input>" : d.span.file_id;
  out += ":" + std::to_string(d.span.start_line) + ":" +
         std::to_string(d.span.start_col) + ": ";
  out += to_string(d.phase);
  out += "/";
  out += to_string(d.category);
  out += ": ";
  out += d.message;
  return out;
}

}  // namespace robojs::lang
