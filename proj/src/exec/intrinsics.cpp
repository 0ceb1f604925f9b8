// SPDX-License-Identifier: Apache-2.0
// Runtime check functions called by instrumented programs. Each one applies
// the strict-mode rule for the operation it replaces, reporting the span of
// the original student code.

#include "checks.hpp"
#include "robojs/check/messages.hpp"
#include "robojs/lang/runtime_names.hpp"

namespace robojs::exec {

using namespace lang;

struct Intrinsics {
  static void install(Interpreter& interp, Env& env);
};

namespace {

SourceSpan span_arg(const CallContext& ctx, const std::vector<Value>& args,
                    std::size_t i) {
  if (i < args.size()) {
    if (const auto* s = std::get_if<std::string>(&args[i])) {
      if (auto span = parse_position_string(*s, ctx.interp.file_id())) return *span;
    }
  }
  return ctx.span;
}

const Value& arg(const std::vector<Value>& args, std::size_t i) {
  static const Value undefined = Undefined{};
  return i < args.size() ? args[i] : undefined;
}

std::string name_arg(const std::vector<Value>& args, std::size_t i) {
  return to_js_string(arg(args, i));
}

void define(Env& env, std::string_view name, NativeFn fn) {
  auto f = make_native("", std::string(name), -1, std::move(fn));
  env.vars.push_back(Binding{std::string(name), FunctionRef(f), true});
}

void define_binary(Env& env, std::string_view name, BinaryOp op) {
  define(env, name, [op](CallContext& ctx, std::vector<Value>& args) -> Value {
    return detail::checked_binary(op, arg(args, 0), arg(args, 1),
                                  span_arg(ctx, args, 2));
  });
}

}  // namespace

void Intrinsics::install(Interpreter& interp, Env& env) {
  (void)interp;
  define(env, rt::kRead, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    return detail::read_variable(ctx.env.get(), name_arg(args, 0),
                                 span_arg(ctx, args, 1), true, true);
  });
  define(env, rt::kWrite, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    Value v = arg(args, 1);
    detail::write_variable(ctx.env.get(), name_arg(args, 0), v,
                           span_arg(ctx, args, 2), true);
    return v;
  });
  define_binary(env, rt::kAdd, BinaryOp::Add);
  define_binary(env, rt::kSub, BinaryOp::Sub);
  define_binary(env, rt::kMul, BinaryOp::Mul);
  define_binary(env, rt::kDiv, BinaryOp::Div);
  define_binary(env, rt::kMod, BinaryOp::Mod);
  define_binary(env, rt::kLT, BinaryOp::Less);
  define_binary(env, rt::kLE, BinaryOp::LessEqual);
  define_binary(env, rt::kGT, BinaryOp::Greater);
  define_binary(env, rt::kGE, BinaryOp::GreaterEqual);
  define_binary(env, rt::kLooseEq, BinaryOp::LooseEqual);
  define_binary(env, rt::kLooseNe, BinaryOp::LooseNotEqual);
  define(env, rt::kNeg, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    return detail::checked_negate(arg(args, 0), span_arg(ctx, args, 1));
  });
  define(env, rt::kCond, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    return detail::checked_condition(arg(args, 0), false, span_arg(ctx, args, 1));
  });
  define(env, rt::kAssignCond, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    return detail::checked_condition(arg(args, 0), true, span_arg(ctx, args, 1));
  });
  define(env, rt::kMember, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    return detail::member_value(ctx.interp, name_arg(args, 0), name_arg(args, 1),
                                span_arg(ctx, args, 2), true);
  });
  define(env, rt::kCall, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    SourceSpan span = span_arg(ctx, args, 1);
    std::vector<Value> rest;
    if (args.size() > 2) {
      rest.assign(std::make_move_iterator(args.begin() + 2),
                  std::make_move_iterator(args.end()));
    }
    return detail::call_value(ctx.interp, arg(args, 0), rest, span, ctx.env, true,
                              false);
  });
  define(env, rt::kArity, [](CallContext& ctx, std::vector<Value>& args) -> Value {
    auto& frames = ctx.interp.frames_;
    if (frames.empty()) return Undefined{};
    const auto& top = frames.back();
    int expected = static_cast<int>(to_number(arg(args, 1)));
    if (top.argc != expected) {
      detail::fail(Category::ArityMismatch,
                   check::msg_arity(top.fn->qualified, expected, top.argc), top.span);
    }
    return Undefined{};
  });
}

}  // namespace robojs::exec
