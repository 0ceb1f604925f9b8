// SPDX-License-Identifier: Apache-2.0
#include "checks.hpp"

#include <cmath>

#include "robojs/check/messages.hpp"

namespace robojs::exec::detail {

using lang::BinaryOp;
using lang::Category;

void fail(Category category, std::string message, const lang::SourceSpan& span) {
  throw RuntimeError{
      lang::Diagnostic{lang::Phase::Dynamic, category, std::move(message), span}};
}

namespace {

double arithmetic(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div: return a / b;
    case BinaryOp::Mod: return std::fmod(a, b);
    default: return 0;
  }
}

}  // namespace

Value limit_length(Value v) {
  if (const auto* s = std::get_if<std::string>(&v); s && s->size() > kMaxStringLength) {
    throw BudgetExhausted{};
  }
  return v;
}

Value checked_binary(BinaryOp op, const Value& l, const Value& r,
                     const lang::SourceSpan& span) {
  std::string sym(lang::symbol(op));
  switch (op) {
    case BinaryOp::LooseEqual:
    case BinaryOp::LooseNotEqual:
      fail(Category::LooseComparison, check::msg_loose_comparison(sym), span);
    case BinaryOp::StrictEqual:
      return strict_equals(l, r);
    case BinaryOp::StrictNotEqual:
      return !strict_equals(l, r);
    case BinaryOp::Add:
      if (is_number(l) && is_number(r)) {
        return std::get<double>(l) + std::get<double>(r);
      }
      if (is_string(l) && is_string(r)) {
        return limit_length(std::get<std::string>(l) + std::get<std::string>(r));
      }
      fail(Category::OpTypeMismatch, check::msg_plus_mismatch(), span);
    case BinaryOp::Sub:
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod:
      if (!is_number(l) || !is_number(r)) {
        fail(Category::OpTypeMismatch, check::msg_numbers_required(sym), span);
      }
      return arithmetic(op, std::get<double>(l), std::get<double>(r));
    case BinaryOp::Less:
    case BinaryOp::LessEqual:
    case BinaryOp::Greater:
    case BinaryOp::GreaterEqual: {
      const Value* fn = is_function(l) ? &l : is_function(r) ? &r : nullptr;
      if (fn) {
        fail(Category::FunctionComparedAsValue,
             check::msg_function_compared(
                 sym, std::get<FunctionRef>(*fn)->qualified),
             span);
      }
      if (!is_number(l) || !is_number(r)) {
        fail(Category::OpTypeMismatch, check::msg_numbers_required(sym), span);
      }
      return js_compare(op, l, r);
    }
    case BinaryOp::And:
    case BinaryOp::Or:
      break;
  }
  return Undefined{};
}

Value checked_negate(const Value& v, const lang::SourceSpan& span) {
  if (!is_number(v)) fail(Category::OpTypeMismatch, check::msg_unary_minus(), span);
  return -std::get<double>(v);
}

bool checked_condition(const Value& v, bool is_assignment,
                       const lang::SourceSpan& span) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (is_assignment) {
    fail(Category::ConditionalAssignment,
         check::msg_conditional_assignment(describe_value(v)), span);
  }
  fail(Category::NonBooleanCondition,
       check::msg_non_boolean_condition(describe_value(v)), span);
}

Value js_binary(BinaryOp op, const Value& l, const Value& r) {
  switch (op) {
    case BinaryOp::Add:
      return limit_length(js_add(l, r));
    case BinaryOp::Sub:
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod:
      return arithmetic(op, to_number(l), to_number(r));
    case BinaryOp::Less:
    case BinaryOp::LessEqual:
    case BinaryOp::Greater:
    case BinaryOp::GreaterEqual:
      return js_compare(op, l, r);
    case BinaryOp::LooseEqual:
      return loose_equals(l, r);
    case BinaryOp::LooseNotEqual:
      return !loose_equals(l, r);
    case BinaryOp::StrictEqual:
      return strict_equals(l, r);
    case BinaryOp::StrictNotEqual:
      return !strict_equals(l, r);
    case BinaryOp::And:
    case BinaryOp::Or:
      break;
  }
  return Undefined{};
}

Binding* lookup(Env* env, std::string_view name, bool user_only) {
  for (Env* e = env; e; e = e->parent.get()) {
    if (user_only && e->intrinsic) return nullptr;
    if (Binding* b = e->find_local(name)) return b;
  }
  return nullptr;
}

Value read_variable(Env* env, const std::string& name,
                    const lang::SourceSpan& span, bool check_undefined,
                    bool user_only) {
  Binding* b = lookup(env, name, user_only);
  if (!b) fail(Category::UndeclaredVariable, check::msg_undeclared(name), span);
  if (!b->initialized) {
    fail(Category::UndeclaredVariable, check::msg_before_declaration(name), span);
  }
  if (check_undefined && is_undefined(b->value)) {
    fail(Category::UninitializedVariable, check::msg_uninitialized(name), span);
  }
  return b->value;
}

void write_variable(Env* env, const std::string& name, Value value,
                    const lang::SourceSpan& span, bool user_only) {
  Binding* b = lookup(env, name, user_only);
  if (!b) fail(Category::UndeclaredVariable, check::msg_undeclared(name), span);
  if (!b->initialized) {
    fail(Category::UndeclaredVariable, check::msg_before_declaration(name), span);
  }
  b->value = std::move(value);
}

}  // namespace robojs::exec::detail
