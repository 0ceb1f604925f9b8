// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/messages.hpp"

namespace robojs::check {

namespace {

std::string q(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

std::string msg_loose_comparison(std::string_view op) {
  std::string strict = op == "==" ? "===" : "!==";
  return q(op) + " is not allowed in RoboJS; use " + q(strict) + " instead.";
}

std::string msg_uninitialized(std::string_view name) {
  return "Variable " + q(name) + " is used before it has been given a value.";
}

std::string msg_conditional_assignment(std::string_view value) {
  return "The condition is an assignment that produced " + std::string(value) +
         ", not true or false. Did you mean \"===\"?";
}

std::string msg_non_boolean_condition(std::string_view value) {
  return "The condition must be true or false, but it is " +
         std::string(value) + ".";
}

std::string msg_numbers_required(std::string_view op) {
  return "Arguments of " + q(op) + " must both be numbers.";
}

std::string msg_plus_mismatch() {
  return "Arguments of \"+\" must both be numbers or both be strings.";
}

std::string msg_unary_minus() {
  return "Argument of unary \"-\" must be a number.";
}

std::string msg_function_compared(std::string_view op, std::string_view fn) {
  return "Arguments of " + q(op) + " must both be numbers, but " +
         std::string(fn) + " is a function. Did you mean to call it with ()?";
}

std::string msg_arity(std::string_view fn, int expected, int got) {
  auto plural = [](int n) {
    return std::to_string(n) + (n == 1 ? " argument" : " arguments");
  };
  return std::string(fn) + " expects " + plural(expected) +
         " but was called with " + std::to_string(got) + ".";
}

std::string msg_missing_member(std::string_view ns, std::string_view name) {
  return std::string(ns) + "." + std::string(name) + " does not exist.";
}

std::string msg_undeclared(std::string_view name) {
  return q(name) + " is not declared.";
}

std::string msg_before_declaration(std::string_view name) {
  return q(name) + " is used before its declaration.";
}

std::string msg_not_a_function(std::string_view value) {
  return std::string(value) + " is not a function.";
}

std::string msg_call_depth(int limit) {
  return "Too many nested function calls (more than " + std::to_string(limit) +
         "); is there a recursion that never stops?";
}

}  // namespace robojs::check
