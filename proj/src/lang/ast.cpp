// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/ast.hpp"

namespace robojs::lang {

std::string_view symbol(UnaryOp op) {
  return op == UnaryOp::Negate ? "-" : "!";
}

std::string_view symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Less: return "<";
    case BinaryOp::LessEqual: return "<=";
    case BinaryOp::Greater: return ">";
    case BinaryOp::GreaterEqual: return ">=";
    case BinaryOp::LooseEqual: return "==";
    case BinaryOp::LooseNotEqual: return "!=";
    case BinaryOp::StrictEqual: return "===";
    case BinaryOp::StrictNotEqual: return "!==";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

std::string_view symbol(AssignOp op) {
  switch (op) {
    case AssignOp::Assign: return "=";
    case AssignOp::Add: return "+=";
    case AssignOp::Sub: return "-=";
    case AssignOp::Mul: return "*=";
    case AssignOp::Div: return "/=";
    case AssignOp::Mod: return "%=";
  }
  return "?";
}

BinaryOp arithmetic_of(AssignOp op) {
  switch (op) {
    case AssignOp::Add: return BinaryOp::Add;
    case AssignOp::Sub: return BinaryOp::Sub;
    case AssignOp::Mul: return BinaryOp::Mul;
    case AssignOp::Div: return BinaryOp::Div;
    case AssignOp::Mod: return BinaryOp::Mod;
    case AssignOp::Assign: break;
  }
  return BinaryOp::Add;
}

bool is_arithmetic(BinaryOp op) {
  return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul ||
         op == BinaryOp::Div || op == BinaryOp::Mod;
}

bool is_ordering(BinaryOp op) {
  return op == BinaryOp::Less || op == BinaryOp::LessEqual ||
         op == BinaryOp::Greater || op == BinaryOp::GreaterEqual;
}

const Expr& strip_parens(const Expr& expr) {
  const Expr* e = &expr;
  while (const auto* p = e->as<Paren>()) e = p->inner.get();
  return *e;
}

bool is_builtin_namespace(std::string_view name) {
  return name == "robot" || name == "console";
}

}  // namespace robojs::lang
