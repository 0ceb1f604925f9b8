// SPDX-License-Identifier: Apache-2.0
#include "robojs/exec/interpreter.hpp"

#include "checks.hpp"
#include "robojs/check/instrument.hpp"
#include "robojs/check/messages.hpp"
#include "robojs/lang/parser.hpp"
#include "robojs/lang/syntax.hpp"

namespace robojs::exec {

using namespace lang;
using detail::fail;

using detail::BudgetExhausted;

std::string_view to_string(ExecStatus status) {
  switch (status) {
    case ExecStatus::Completed: return "completed";
    case ExecStatus::Aborted: return "aborted";
    case ExecStatus::Stopped: return "stopped";
    case ExecStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "completed";
}

// Defined in intrinsics.cpp.
struct Intrinsics {
  static void install(Interpreter& interp, Env& env);
};

class Evaluator {
 public:
  explicit Evaluator(Interpreter& in) : in_(in) {}

  enum class Completion { Normal, Return };

  // --- declarations -------------------------------------------------------

  void hoist(const std::vector<StmtPtr>& body, const EnvPtr& env,
             bool functions) {
    bool has_functions = false;
    for (const auto& s : body) {
      if (const auto* l = s->as<LetDecl>()) {
        env->vars.push_back(Binding{l->name, Undefined{}, false});
      } else if (const auto* f = s->as<FunctionDecl>(); f && functions) {
        auto fn = std::make_shared<Function>();
        fn->name = f->name;
        fn->qualified = f->name;
        fn->source = f->source_text.empty() ? "function " + f->name + "() {}"
                                            : f->source_text;
        fn->decl = f;
        fn->closure = env;
        fn->program = in_.program_;
        env->vars.push_back(Binding{f->name, FunctionRef(fn), true});
        has_functions = true;
      }
    }
    if (has_functions) in_.closure_envs_.push_back(env);
  }

  // --- statements ---------------------------------------------------------

  void yield_point() {
    if (in_.stop_source_.stop_requested()) throw StopRequested{};
    if (in_.options_.on_yield) in_.options_.on_yield();
  }

  void count_step() {
    if (++in_.steps_ > in_.options_.budget) throw BudgetExhausted{};
  }

  Completion exec_list(const std::vector<StmtPtr>& list, const EnvPtr& env) {
    for (const auto& s : list) {
      if (exec(*s, env) == Completion::Return) return Completion::Return;
    }
    return Completion::Normal;
  }

  Completion exec(const Stmt& s, const EnvPtr& env) {
    yield_point();
    return std::visit(
        [&](const auto& n) -> Completion {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LetDecl>) {
            Value v = n.init ? eval(*n.init, env) : Value{Undefined{}};
            Binding* b = env->find_local(n.name);
            if (!b) {
              env->vars.push_back(Binding{n.name, Undefined{}, false});
              b = &env->vars.back();
            }
            b->value = std::move(v);
            b->initialized = true;
            return Completion::Normal;
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            eval(*n.expr, env);
            return Completion::Normal;
          } else if constexpr (std::is_same_v<T, If>) {
            if (condition(*n.cond, env)) return exec(*n.then_branch, env);
            if (n.else_branch) return exec(*n.else_branch, env);
            return Completion::Normal;
          } else if constexpr (std::is_same_v<T, While>) {
            while (condition(*n.cond, env)) {
              count_step();
              if (exec(*n.body, env) == Completion::Return) return Completion::Return;
            }
            return Completion::Normal;
          } else if constexpr (std::is_same_v<T, For>) {
            auto header = std::make_shared<Env>();
            header->parent = env;
            if (n.init) {
              if (const auto* l = n.init->template as<LetDecl>()) {
                header->vars.push_back(Binding{l->name, Undefined{}, false});
              }
              exec(*n.init, header);
            }
            while (!n.cond || condition(*n.cond, header)) {
              count_step();
              if (exec(*n.body, header) == Completion::Return) {
                return Completion::Return;
              }
              if (n.update) eval(*n.update, header);
              yield_point();
            }
            return Completion::Normal;
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            return Completion::Normal;
          } else if constexpr (std::is_same_v<T, Return>) {
            in_.return_value_ = n.value ? eval(*n.value, env) : Value{Undefined{}};
            return Completion::Return;
          } else {
            auto block = std::make_shared<Env>();
            block->parent = env;
            hoist(n.body, block, false);
            return exec_list(n.body, block);
          }
        },
        s.node);
  }

  bool condition(const Expr& cond, const EnvPtr& env) {
    Value v = eval(cond, env);
    if (!in_.strict_) return to_boolean(v);
    return detail::checked_condition(v, strip_parens(cond).as<Assign>() != nullptr,
                                     cond.span);
  }

  // --- expressions --------------------------------------------------------

  Value eval(const Expr& e, const EnvPtr& env) {
    return std::visit(
        [&](const auto& n) -> Value {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, NumberLit>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, StringLit>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, BoolLit>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, Identifier>) {
            return detail::read_variable(env.get(), n.name, e.span, in_.strict_,
                                         false);
          } else if constexpr (std::is_same_v<T, Unary>) {
            Value v = eval(*n.operand, env);
            if (n.op == UnaryOp::Not) return !to_boolean(v);
            if (in_.strict_) return detail::checked_negate(v, e.span);
            return -to_number(v);
          } else if constexpr (std::is_same_v<T, Binary>) {
            return binary(n, e, env);
          } else if constexpr (std::is_same_v<T, Call>) {
            Value callee = eval(*n.callee, env);
            std::vector<Value> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(eval(*a, env));
            return call(callee, args, e.span, env, in_.strict_, in_.strict_);
          } else if constexpr (std::is_same_v<T, Member>) {
            return member(n.ns, n.name, e.span, in_.strict_);
          } else if constexpr (std::is_same_v<T, Paren>) {
            return eval(*n.inner, env);
          } else {
            return assign(n, e, env);
          }
        },
        e.node);
  }

  Value binary(const Binary& n, const Expr& e, const EnvPtr& env) {
    if (n.op == BinaryOp::And || n.op == BinaryOp::Or) {
      Value l = eval(*n.lhs, env);
      bool truthy = to_boolean(l);
      if ((n.op == BinaryOp::And) != truthy) return l;
      return eval(*n.rhs, env);
    }
    Value l = eval(*n.lhs, env);
    Value r = eval(*n.rhs, env);
    if (in_.strict_) return detail::checked_binary(n.op, l, r, e.span);
    return detail::js_binary(n.op, l, r);
  }

  Value assign(const Assign& n, const Expr& e, const EnvPtr& env) {
    if (n.op == AssignOp::Assign) {
      Value v = eval(*n.value, env);
      detail::write_variable(env.get(), n.target, v, e.span, false);
      return v;
    }
    Value current = detail::read_variable(env.get(), n.target, n.target_span,
                                          in_.strict_, false);
    Value rhs = eval(*n.value, env);
    BinaryOp op = arithmetic_of(n.op);
    Value result = in_.strict_ ? detail::checked_binary(op, current, rhs, e.span)
                               : detail::js_binary(op, current, rhs);
    detail::write_variable(env.get(), n.target, result, e.span, false);
    return result;
  }

  Value member(const std::string& ns, const std::string& name,
               const SourceSpan& span, bool strict) {
    auto space = in_.namespaces_.find(ns);
    if (space != in_.namespaces_.end()) {
      auto m = space->second.find(name);
      if (m != space->second.end()) return m->second;
    }
    if (strict) {
      fail(Category::MissingMember, check::msg_missing_member(ns, name), span);
    }
    return Undefined{};
  }

  Value call(const Value& callee, std::vector<Value>& args,
             const SourceSpan& span, const EnvPtr& env, bool native_arity,
             bool user_arity) {
    const auto* ref = std::get_if<FunctionRef>(&callee);
    if (!ref) {
      fail(Category::NotAFunction, check::msg_not_a_function(describe_value(callee)),
           span);
    }
    const Function& fn = **ref;
    int argc = static_cast<int>(args.size());
    if (fn.is_user()) return invoke(fn, args, span, user_arity);
    if (native_arity && fn.arity >= 0 && argc != fn.arity) {
      fail(Category::ArityMismatch, check::msg_arity(fn.qualified, fn.arity, argc),
           span);
    }
    CallContext ctx{in_, span, env};
    return fn.native(ctx, args);
  }

  Value invoke(const Function& fn, std::vector<Value>& args,
               const SourceSpan& span, bool check_arity) {
    count_step();
    if (in_.depth_ >= in_.options_.max_call_depth) {
      fail(Category::CallDepthExceeded,
           check::msg_call_depth(in_.options_.max_call_depth), span);
    }
    int argc = static_cast<int>(args.size());
    in_.frames_.push_back(Interpreter::Frame{&fn, argc, span});
    ++in_.depth_;
    struct Pop {
      Interpreter& in;
      ~Pop() {
        in.frames_.pop_back();
        --in.depth_;
      }
    } pop{in_};

    const FunctionDecl& decl = *fn.decl;
    int params = static_cast<int>(decl.params.size());
    if (check_arity && argc != params) {
      fail(Category::ArityMismatch, check::msg_arity(fn.qualified, params, argc),
           span);
    }
    auto local = std::make_shared<Env>();
    local->parent = fn.closure;
    for (int i = 0; i < params; ++i) {
      local->vars.push_back(Binding{decl.params[i].name,
                                    i < argc ? args[i] : Value{Undefined{}}, true});
    }
    hoist(decl.body, local, true);
    if (exec_list(decl.body, local) == Completion::Return) {
      Value v = std::move(in_.return_value_);
      in_.return_value_ = Undefined{};
      return v;
    }
    return Undefined{};
  }

 private:
  Interpreter& in_;
};

namespace detail {

Value call_value(Interpreter& interp, const Value& callee, std::vector<Value>& args,
                 const SourceSpan& span, const EnvPtr& env,
                 bool check_native_arity, bool check_user_arity) {
  return Evaluator(interp).call(callee, args, span, env, check_native_arity,
                                check_user_arity);
}

Value member_value(Interpreter& interp, const std::string& ns,
                   const std::string& name, const SourceSpan& span, bool strict) {
  return Evaluator(interp).member(ns, name, span, strict);
}

}  // namespace detail

// --- Interpreter ------------------------------------------------------------

Interpreter::Interpreter(ExecOptions options) : options_(std::move(options)) {
  add_namespace("console",
                {make_native("console", "log", -1,
                             [](CallContext& ctx, std::vector<Value>& args) -> Value {
                               ctx.interp.print(format_log(args));
                               return Undefined{};
                             })});
  // console.log renders like a bound native
  auto& log = namespaces_["console"]["log"];
  auto patched = std::make_shared<Function>(*log);
  patched->source = "function () { [native code] }";
  log = patched;
}

Interpreter::~Interpreter() { reset_environment(); }

void Interpreter::add_namespace(const std::string& ns,
                                std::vector<FunctionRef> members) {
  auto& space = namespaces_[ns];
  for (auto& m : members) space[m->name] = std::move(m);
}

void Interpreter::add_halt_hook(std::function<void()> hook) {
  halt_hooks_.push_back(std::move(hook));
}

void Interpreter::print(const std::string& line) {
  output_.push_back(line);
  if (options_.on_print) options_.on_print(line);
}

void Interpreter::reset_environment() {
  // closures reference their defining scope, which holds the closure
  for (auto& weak : closure_envs_) {
    if (auto env = weak.lock()) env->vars.clear();
  }
  closure_envs_.clear();
  globals_.reset();
}

EnvPtr Interpreter::intrinsic_env() {
  if (!intrinsics_) {
    intrinsics_ = std::make_shared<Env>();
    intrinsics_->intrinsic = true;
    Intrinsics::install(*this, *intrinsics_);
  }
  return intrinsics_;
}

std::stop_token Interpreter::stop_token() const {
  std::lock_guard lock(stop_mutex_);
  return stop_source_.get_token();
}

void Interpreter::stop() {
  {
    std::lock_guard lock(stop_mutex_);
    stop_source_.request_stop();
  }
  // wait for any dispatch in flight
  std::lock_guard wait(dispatch_mutex_);
}

bool Interpreter::dispatch(const std::function<void()>& send) {
  std::lock_guard lock(dispatch_mutex_);
  if (stop_token().stop_requested()) return false;
  send();
  return true;
}

ExecOutcome Interpreter::run(std::shared_ptr<const Program> program) {
  {
    std::lock_guard lock(stop_mutex_);
    stop_source_ = std::stop_source{};
  }
  running_ = true;
  reset_environment();
  program_ = program;
  file_id_ = program->file_id;
  strict_ = options_.mode == Mode::Strict;
  steps_ = 0;
  depth_ = 0;
  frames_.clear();
  output_.clear();
  return_value_ = Undefined{};

  globals_ = std::make_shared<Env>();
  if (!strict_ && check::is_instrumented(*program)) globals_->parent = intrinsic_env();

  ExecOutcome outcome;
  Evaluator ev(*this);
  try {
    ev.hoist(program->body, globals_, true);
    ev.exec_list(program->body, globals_);
    outcome.status = ExecStatus::Completed;
  } catch (const RuntimeError& e) {
    outcome.status = ExecStatus::Aborted;
    outcome.diagnostic = e.diagnostic;
  } catch (const StopRequested&) {
    outcome.status = ExecStatus::Stopped;
  } catch (const BudgetExhausted&) {
    outcome.status = ExecStatus::BudgetExhausted;
  }
  frames_.clear();
  depth_ = 0;
  if (outcome.status != ExecStatus::Completed) {
    for (auto& hook : halt_hooks_) hook();
  }
  outcome.printed_output = output_;
  outcome.steps = steps_;
  running_ = false;
  return outcome;
}

ExecOutcome Interpreter::run_source(std::string_view source, std::string file_id) {
  auto parsed = parse_source(source, file_id);
  if (!parsed.ok()) {
    ExecOutcome outcome;
    outcome.status = ExecStatus::Aborted;
    outcome.diagnostic = parsed.diagnostics.front();
    return outcome;
  }
  return run(std::shared_ptr<const Program>(std::move(parsed.program)));
}

ReplResult Interpreter::repl_eval(std::string_view text) {
  auto parsed = parse_expression(text, "<repl>");
  if (!parsed.expr) {
    return ReplResult{false, format_diagnostic(parsed.diagnostics.front())};
  }
  if (!globals_) globals_ = std::make_shared<Env>();
  {
    std::lock_guard lock(stop_mutex_);
    stop_source_ = std::stop_source{};
  }
  bool saved_strict = strict_;
  strict_ = true;
  steps_ = 0;
  depth_ = 0;
  frames_.clear();
  ReplResult result;
  Evaluator ev(*this);
  try {
    Value v = ev.eval(*parsed.expr, globals_);
    result.text = format_log({v});
  } catch (const RuntimeError& e) {
    result.ok = false;
    result.text = format_diagnostic(e.diagnostic);
  } catch (const StopRequested&) {
    result.ok = false;
    result.text = "stopped";
  } catch (const BudgetExhausted&) {
    result.ok = false;
    result.text = "step budget exhausted";
  }
  strict_ = saved_strict;
  return result;
}

ExecOutcome run_program(std::string_view source, Mode mode, std::uint64_t budget,
                        std::string file_id) {
  ExecOptions options;
  options.mode = mode;
  options.budget = budget;
  Interpreter interp(options);
  return interp.run_source(source, std::move(file_id));
}

}  // namespace robojs::exec
