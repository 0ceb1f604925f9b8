// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "robojs/lang/ast.hpp"

namespace robojs::exec {

class Interpreter;
struct Env;

struct Undefined {
  bool operator==(const Undefined&) const = default;
};

struct Function;
using FunctionRef = std::shared_ptr<const Function>;

using Value = std::variant<Undefined, double, bool, std::string, FunctionRef>;

/// What a native function sees of the call that invoked it.
struct CallContext {
  Interpreter& interp;
  const lang::SourceSpan& span;  // call site in student code
  const std::shared_ptr<Env>& env;  // caller's scope
};

using NativeFn = std::function<Value(CallContext&, std::vector<Value>& args)>;

struct Function {
  std::string name;       // as shown by console.log: [Function: name]
  std::string qualified;  // as named in messages: "f" or "robot.moveTo"
  std::string source;     // string conversion

  // user functions
  const lang::FunctionDecl* decl = nullptr;
  std::shared_ptr<Env> closure;
  std::shared_ptr<const lang::Program> program;  // keeps decl alive

  // natives
  NativeFn native;
  int arity = -1;  // -1: variadic

  bool is_user() const { return decl != nullptr; }
};

FunctionRef make_native(std::string ns, std::string name, int arity, NativeFn fn);

inline bool is_number(const Value& v) { return std::holds_alternative<double>(v); }
inline bool is_string(const Value& v) { return std::holds_alternative<std::string>(v); }
inline bool is_boolean(const Value& v) { return std::holds_alternative<bool>(v); }
inline bool is_undefined(const Value& v) { return std::holds_alternative<Undefined>(v); }
inline bool is_function(const Value& v) { return std::holds_alternative<FunctionRef>(v); }

// JavaScript conversions for the admitted value kinds.
double to_number(const Value& v);
double string_to_number(std::string_view text);
bool to_boolean(const Value& v);
std::string to_js_string(const Value& v);

bool strict_equals(const Value& a, const Value& b);
bool loose_equals(const Value& a, const Value& b);
/// `<`, `<=`, `>`, `>=` by the abstract relational comparison; false
/// whenever NaN is involved.
bool js_compare(lang::BinaryOp op, const Value& a, const Value& b);
Value js_add(const Value& a, const Value& b);

/// console.log rendering of a single non-format argument.
std::string inspect(const Value& v);
/// Node-style console.log line, including %-format handling.
std::string format_log(const std::vector<Value>& args);

/// Value as quoted in diagnostics: 3, "abc", undefined, function f.
std::string describe_value(const Value& v);

}  // namespace robojs::exec
