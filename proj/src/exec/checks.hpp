// SPDX-License-Identifier: Apache-2.0
#pragma once

// Strict-mode operator semantics shared by the interpreter and the runtime
// check functions.

#include "robojs/exec/interpreter.hpp"

namespace robojs::exec::detail {

/// Thrown when a run exceeds its step budget or builds an oversized string.
struct BudgetExhausted {};

inline constexpr std::size_t kMaxStringLength = std::size_t{1} << 24;

/// Passes `v` through, or throws BudgetExhausted for an oversized string.
Value limit_length(Value v);

[[noreturn]] void fail(lang::Category category, std::string message,
                       const lang::SourceSpan& span);

Value checked_binary(lang::BinaryOp op, const Value& l, const Value& r,
                     const lang::SourceSpan& span);
Value checked_negate(const Value& v, const lang::SourceSpan& span);
bool checked_condition(const Value& v, bool is_assignment,
                       const lang::SourceSpan& span);

/// Permissive (JavaScript) operator semantics.
Value js_binary(lang::BinaryOp op, const Value& l, const Value& r);

/// Name lookup through the scope chain. `user_only` skips the scope that
/// holds the runtime check functions.
Binding* lookup(Env* env, std::string_view name, bool user_only);
Value read_variable(Env* env, const std::string& name,
                    const lang::SourceSpan& span, bool check_undefined,
                    bool user_only);
void write_variable(Env* env, const std::string& name, Value value,
                    const lang::SourceSpan& span, bool user_only);

}  // namespace robojs::exec::detail

namespace robojs::exec::detail {

/// Calls a value from native code, with the interpreter's call semantics.
Value call_value(Interpreter& interp, const Value& callee, std::vector<Value>& args,
                 const lang::SourceSpan& span, const EnvPtr& env,
                 bool check_native_arity, bool check_user_arity);
/// `ns.name` lookup; MissingMember when `strict` and absent.
Value member_value(Interpreter& interp, const std::string& ns,
                   const std::string& name, const lang::SourceSpan& span,
                   bool strict);

}  // namespace robojs::exec::detail
