// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace robojs::check {

// Message templates shared by the static checker, the strict interpreter and
// the runtime check functions, so each category reads the same everywhere.
// Operator arguments are the source symbol, e.g. ">" or "+".

std::string msg_loose_comparison(std::string_view op);
std::string msg_uninitialized(std::string_view name);
std::string msg_conditional_assignment(std::string_view value);
std::string msg_non_boolean_condition(std::string_view value);
std::string msg_numbers_required(std::string_view op);
std::string msg_plus_mismatch();
std::string msg_unary_minus();
std::string msg_function_compared(std::string_view op, std::string_view fn);
std::string msg_arity(std::string_view fn, int expected, int got);
std::string msg_missing_member(std::string_view ns, std::string_view name);
std::string msg_undeclared(std::string_view name);
std::string msg_before_declaration(std::string_view name);
std::string msg_not_a_function(std::string_view value);
std::string msg_call_depth(int limit);

}  // namespace robojs::check
