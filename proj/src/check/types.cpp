// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/types.hpp"

#include "robojs/api/manifest.hpp"

namespace robojs::check {

using namespace lang;

namespace {

TypeMask plus_result(TypeMask l, TypeMask r) {
  if (l == kNumber && r == kNumber) return kNumber;
  if (l == kString && r == kString) return kString;
  return kNumber | kString;
}

}  // namespace

TypeInference::TypeInference(const Resolution& resolution) : res_(resolution) {
  // Least fixpoint from the empty set; masks only grow, so this terminates.
  for (const auto& d : res_.declarations()) vars_[d.get()] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& d : res_.declarations()) {
      TypeMask m = 0;
      switch (d->kind) {
        case Declaration::Kind::Param:
          m = kAnyType & ~kUndefined;
          break;
        case Declaration::Kind::Function:
          m = kFunction;
          break;
        case Declaration::Kind::Let:
          if (const auto* l = d->stmt->as<LetDecl>(); l && l->init) {
            m = compute(*l->init);
          }
          break;
      }
      for (const Expr* w : d->writes) m |= compute(*w);
      m &= ~kUndefined;  // reading undefined aborts before any use
      if ((vars_[d.get()] | m) != vars_[d.get()]) {
        vars_[d.get()] |= m;
        changed = true;
      }
    }
  }
}

TypeMask TypeInference::variable(const Declaration* d) const {
  if (!d) return kAnyType & ~kUndefined;
  auto it = vars_.find(d);
  return it == vars_.end() ? kAnyType : it->second;
}

TypeMask TypeInference::type_of(const Expr& expr) const { return compute(expr); }

TypeMask TypeInference::compute(const Expr& expr) const {
  return std::visit(
      [&](const auto& n) -> TypeMask {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return kNumber;
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return kString;
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return kBoolean;
        } else if constexpr (std::is_same_v<T, Identifier>) {
          return variable(res_.lookup(expr));
        } else if constexpr (std::is_same_v<T, Unary>) {
          return n.op == UnaryOp::Negate ? kNumber : kBoolean;
        } else if constexpr (std::is_same_v<T, Binary>) {
          switch (n.op) {
            case BinaryOp::Add:
              return plus_result(compute(*n.lhs), compute(*n.rhs));
            case BinaryOp::Sub:
            case BinaryOp::Mul:
            case BinaryOp::Div:
            case BinaryOp::Mod:
              return kNumber;
            case BinaryOp::And:
            case BinaryOp::Or:
              return compute(*n.lhs) | compute(*n.rhs);
            default:
              return kBoolean;
          }
        } else if constexpr (std::is_same_v<T, Call>) {
          if (const auto* m = n.callee->template as<Member>()) {
            if (m->ns == "robot") {
              const auto* e = api::api_catalog().find(m->name);
              if (e) return e->result == api::ResultKind::Number ? kNumber : kUndefined;
            }
            if (m->ns == "console" && m->name == "log") return kUndefined;
          }
          return kAnyType;
        } else if constexpr (std::is_same_v<T, Member>) {
          // a member that does not exist aborts before producing a value
          if (n.ns == "robot") return api::api_catalog().find(n.name) ? kFunction : 0;
          return n.name == "log" ? kFunction : 0;
        } else if constexpr (std::is_same_v<T, Paren>) {
          return compute(*n.inner);
        } else {
          if (n.op == AssignOp::Assign) return compute(*n.value);
          if (n.op == AssignOp::Add) {
            return plus_result(variable(res_.lookup(expr)), compute(*n.value));
          }
          return kNumber;
        }
      },
      expr.node);
}

}  // namespace robojs::check
