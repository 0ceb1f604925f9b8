// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/instrument.hpp"

#include "robojs/check/resolver.hpp"
#include "robojs/lang/printer.hpp"
#include "robojs/lang/runtime_names.hpp"

namespace robojs::check {

using namespace lang;

namespace {

// Synthesized nodes carry no position of their own.
const SourceSpan kNoSpan{};

ExprPtr str(std::string s) { return make_expr(kNoSpan, StringLit{std::move(s)}); }
ExprPtr num(double v) { return make_expr(kNoSpan, NumberLit{v}); }
ExprPtr ident(std::string name) {
  return make_expr(kNoSpan, Identifier{std::move(name)});
}
ExprPtr pos(const SourceSpan& span) { return str(to_position_string(span)); }

ExprPtr call(std::string_view fn, std::vector<ExprPtr> args) {
  return make_expr(kNoSpan, Call{ident(std::string(fn)), std::move(args)});
}

template <typename... A>
std::vector<ExprPtr> list(A&&... a) {
  std::vector<ExprPtr> v;
  (v.push_back(std::forward<A>(a)), ...);
  return v;
}

std::string_view checker_for(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return rt::kAdd;
    case BinaryOp::Sub: return rt::kSub;
    case BinaryOp::Mul: return rt::kMul;
    case BinaryOp::Div: return rt::kDiv;
    case BinaryOp::Mod: return rt::kMod;
    case BinaryOp::Less: return rt::kLT;
    case BinaryOp::LessEqual: return rt::kLE;
    case BinaryOp::Greater: return rt::kGT;
    case BinaryOp::GreaterEqual: return rt::kGE;
    case BinaryOp::LooseEqual: return rt::kLooseEq;
    case BinaryOp::LooseNotEqual: return rt::kLooseNe;
    default: return {};
  }
}

bool is_console_log(const Expr& callee) {
  const auto* m = callee.as<Member>();
  return m && m->ns == "console" && m->name == "log";
}

class Instrumenter {
 public:
  Instrumenter(const Program& p, const ArityTable& arities)
      : program_(p), arities_(arities), res_(p) {}

  Program run() {
    Program out;
    out.file_id = program_.file_id;
    out.body.push_back(
        make_stmt(kNoSpan, ExprStmt{str(std::string(rt::kDirective))}));
    for (const auto& s : program_.body) out.body.push_back(stmt(*s));
    return out;
  }

 private:
  StmtPtr stmt(const Stmt& s) {
    return std::visit(
        [&](const auto& n) -> StmtPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LetDecl>) {
            return make_stmt(s.span, LetDecl{n.name, n.name_span,
                                             n.init ? expr(*n.init) : nullptr});
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            return make_stmt(s.span, ExprStmt{expr(*n.expr)});
          } else if constexpr (std::is_same_v<T, If>) {
            return make_stmt(s.span,
                             If{condition(*n.cond), stmt(*n.then_branch),
                                n.else_branch ? stmt(*n.else_branch) : nullptr});
          } else if constexpr (std::is_same_v<T, While>) {
            return make_stmt(s.span, While{condition(*n.cond), stmt(*n.body)});
          } else if constexpr (std::is_same_v<T, For>) {
            For f;
            if (n.init) f.init = stmt(*n.init);
            if (n.cond) f.cond = condition(*n.cond);
            if (n.update) f.update = expr(*n.update);
            f.body = stmt(*n.body);
            return make_stmt(s.span, std::move(f));
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            FunctionDecl f;
            f.name = n.name;
            f.name_span = n.name_span;
            f.params = n.params;
            f.source_text = n.source_text;
            f.body.push_back(function_arity_prologue(n));
            for (const auto& c : n.body) f.body.push_back(stmt(*c));
            return make_stmt(s.span, std::move(f));
          } else if constexpr (std::is_same_v<T, Return>) {
            return make_stmt(s.span, Return{n.value ? expr(*n.value) : nullptr});
          } else {
            Block b;
            for (const auto& c : n.body) b.body.push_back(stmt(*c));
            return make_stmt(s.span, std::move(b));
          }
        },
        s.node);
  }

  ExprPtr condition(const Expr& cond) {
    std::string_view fn =
        strip_parens(cond).as<Assign>() ? rt::kAssignCond : rt::kCond;
    return call(fn, list(expr(cond), pos(cond.span)));
  }

  ExprPtr read(const Expr& use, const std::string& name, const SourceSpan& span) {
    if (res_.safe_read(use)) return ident(name);
    return call(rt::kRead, list(str(name), pos(span)));
  }

  ExprPtr write(const Expr& assign, const std::string& name, ExprPtr value) {
    if (res_.safe_write(assign)) {
      return make_expr(kNoSpan, Assign{AssignOp::Assign, name, kNoSpan,
                                       std::move(value)});
    }
    return call(rt::kWrite, list(str(name), std::move(value), pos(assign.span)));
  }

  ExprPtr expr(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> ExprPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, NumberLit> ||
                        std::is_same_v<T, StringLit> ||
                        std::is_same_v<T, BoolLit>) {
            return make_expr(kNoSpan, n);
          } else if constexpr (std::is_same_v<T, Identifier>) {
            return read(e, n.name, e.span);
          } else if constexpr (std::is_same_v<T, Unary>) {
            if (n.op == UnaryOp::Negate) {
              return call(rt::kNeg, list(expr(*n.operand), pos(e.span)));
            }
            return make_expr(kNoSpan, Unary{n.op, expr(*n.operand)});
          } else if constexpr (std::is_same_v<T, Binary>) {
            std::string_view fn = checker_for(n.op);
            if (fn.empty()) {
              return make_expr(kNoSpan, Binary{n.op, expr(*n.lhs), expr(*n.rhs)});
            }
            return call(fn, list(expr(*n.lhs), expr(*n.rhs), pos(e.span)));
          } else if constexpr (std::is_same_v<T, Call>) {
            std::vector<ExprPtr> args;
            if (is_console_log(*n.callee)) {
              for (const auto& a : n.args) args.push_back(expr(*a));
              const auto& m = *n.callee->template as<Member>();
              return make_expr(kNoSpan, Call{make_expr(kNoSpan, m), std::move(args)});
            }
            args.push_back(expr(*n.callee));
            args.push_back(pos(e.span));
            for (const auto& a : n.args) args.push_back(expr(*a));
            return call(rt::kCall, std::move(args));
          } else if constexpr (std::is_same_v<T, Member>) {
            return call(rt::kMember, list(str(n.ns), str(n.name), pos(e.span)));
          } else if constexpr (std::is_same_v<T, Paren>) {
            return make_expr(kNoSpan, Paren{expr(*n.inner)});
          } else {
            if (n.op == AssignOp::Assign) {
              return write(e, n.target, expr(*n.value));
            }
            ExprPtr current = read(e, n.target, n.target_span);
            ExprPtr updated =
                call(checker_for(arithmetic_of(n.op)),
                     list(std::move(current), expr(*n.value), pos(e.span)));
            return write(e, n.target, std::move(updated));
          }
        },
        e.node);
  }

  const Program& program_;
  [[maybe_unused]] const ArityTable& arities_;
  Resolution res_;
};

}  // namespace

bool is_instrumented(const Program& program) {
  if (program.body.empty()) return false;
  const auto* s = program.body.front()->as<ExprStmt>();
  if (!s) return false;
  const auto* lit = s->expr->as<StringLit>();
  return lit && lit->value == rt::kDirective;
}

StmtPtr function_arity_prologue(const FunctionDecl& fn) {
  return make_stmt(
      kNoSpan,
      ExprStmt{call(rt::kArity,
                    list(str(fn.name), num(static_cast<double>(fn.params.size()))))});
}

Program instrument_program(const Program& program, const ArityTable& arities) {
  if (is_instrumented(program)) throw AlreadyInstrumented{};
  return Instrumenter(program, arities).run();
}

std::string instrument(const Program& program, const ArityTable& arities) {
  return print(instrument_program(program, arities));
}

}  // namespace robojs::check
