// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/static_check.hpp"

#include <algorithm>

#include "robojs/check/messages.hpp"
#include "robojs/check/resolver.hpp"
#include "robojs/check/types.hpp"

namespace robojs::check {

using namespace lang;

bool is_check_category(Category category) {
  return std::find(kCheckCategories.begin(), kCheckCategories.end(),
                   category) != kCheckCategories.end();
}

namespace {

std::string function_label(const Expr& e) {
  const Expr& s = strip_parens(e);
  if (const auto* m = s.as<Member>()) return m->ns + "." + m->name;
  if (const auto* i = s.as<Identifier>()) return i->name;
  return "this value";
}

class StaticChecker {
 public:
  StaticChecker(const Program& p, const ArityTable& arities)
      : program_(p), arities_(arities), res_(p), types_(res_) {}

  Diagnostics run() {
    for (const auto& s : program_.body) stmt(*s);
    return std::move(out_);
  }

 private:
  void report(Category c, std::string message, const SourceSpan& span) {
    out_.push_back(Diagnostic{Phase::Static, c, std::move(message), span});
  }

  void stmt(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LetDecl>) {
            if (n.init) expr(*n.init);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            expr(*n.expr);
          } else if constexpr (std::is_same_v<T, If>) {
            expr(*n.cond);
            stmt(*n.then_branch);
            if (n.else_branch) stmt(*n.else_branch);
          } else if constexpr (std::is_same_v<T, While>) {
            expr(*n.cond);
            stmt(*n.body);
          } else if constexpr (std::is_same_v<T, For>) {
            if (n.init) stmt(*n.init);
            if (n.cond) expr(*n.cond);
            if (n.update) expr(*n.update);
            stmt(*n.body);
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            for (const auto& c : n.body) stmt(*c);
          } else if constexpr (std::is_same_v<T, Return>) {
            if (n.value) expr(*n.value);
          } else {
            for (const auto& c : n.body) stmt(*c);
          }
        },
        s.node);
  }

  void binary_types(BinaryOp op, TypeMask l, TypeMask r, const Expr& lhs,
                    const Expr& rhs, const SourceSpan& span) {
    std::string sym(symbol(op));
    if (is_ordering(op)) {
      if (l == kFunction || r == kFunction) {
        report(Category::FunctionComparedAsValue,
               msg_function_compared(sym, function_label(l == kFunction ? lhs : rhs)),
               span);
        return;
      }
      bool no_function = !(l & kFunction) && !(r & kFunction);
      if (l && r && no_function && (!(l & kNumber) || !(r & kNumber))) {
        report(Category::OpTypeMismatch, msg_numbers_required(sym), span);
      }
      return;
    }
    if (op == BinaryOp::Add) {
      if (l && r && !((l & kNumber) && (r & kNumber)) &&
          !((l & kString) && (r & kString))) {
        report(Category::OpTypeMismatch, msg_plus_mismatch(), span);
      }
      return;
    }
    if (is_arithmetic(op) && l && r && (!(l & kNumber) || !(r & kNumber))) {
      report(Category::OpTypeMismatch, msg_numbers_required(sym), span);
    }
  }

  void expr(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Unary>) {
            expr(*n.operand);
            if (n.op == UnaryOp::Negate) {
              TypeMask t = types_.type_of(*n.operand);
              if (t && !(t & kNumber)) {
                report(Category::OpTypeMismatch, msg_unary_minus(), e.span);
              }
            }
          } else if constexpr (std::is_same_v<T, Binary>) {
            expr(*n.lhs);
            expr(*n.rhs);
            if (n.op == BinaryOp::LooseEqual || n.op == BinaryOp::LooseNotEqual) {
              report(Category::LooseComparison,
                     msg_loose_comparison(symbol(n.op)), e.span);
              return;
            }
            binary_types(n.op, types_.type_of(*n.lhs), types_.type_of(*n.rhs),
                         *n.lhs, *n.rhs, e.span);
          } else if constexpr (std::is_same_v<T, Call>) {
            expr(*n.callee);
            for (const auto& a : n.args) expr(*a);
            call(n, e.span);
          } else if constexpr (std::is_same_v<T, Member>) {
            if (!arities_.has_member(n.ns, n.name)) {
              report(Category::MissingMember, msg_missing_member(n.ns, n.name),
                     e.span);
            }
          } else if constexpr (std::is_same_v<T, Paren>) {
            expr(*n.inner);
          } else if constexpr (std::is_same_v<T, Assign>) {
            expr(*n.value);
            if (n.op != AssignOp::Assign) {
              const Declaration* d = res_.lookup(e);
              if (!d) return;
              binary_types(arithmetic_of(n.op), types_.variable(d),
                           types_.type_of(*n.value), e, *n.value, e.span);
            }
          }
        },
        e.node);
  }

  void call(const Call& c, const SourceSpan& span) {
    int got = static_cast<int>(c.args.size());
    const Expr& callee = strip_parens(*c.callee);
    if (const auto* m = callee.as<Member>()) {
      auto arity = arities_.builtin_arity(m->ns, m->name);
      if (arity && *arity != got) {
        report(Category::ArityMismatch,
               msg_arity(m->ns + "." + m->name, *arity, got), span);
      }
      return;
    }
    if (const FunctionDecl* f = res_.known_function(callee)) {
      auto it = arities_.user.find(f);
      int expected = it != arities_.user.end() ? it->second
                                               : static_cast<int>(f->params.size());
      if (expected != got) {
        report(Category::ArityMismatch, msg_arity(f->name, expected, got), span);
      }
    }
  }

  const Program& program_;
  const ArityTable& arities_;
  Resolution res_;
  TypeInference types_;
  Diagnostics out_;
};

}  // namespace

Diagnostics static_check(const Program& program, const ArityTable& arities) {
  return StaticChecker(program, arities).run();
}

}  // namespace robojs::check
