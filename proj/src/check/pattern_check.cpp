// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/messages.hpp"
#include "robojs/check/resolver.hpp"
#include "robojs/check/static_check.hpp"
#include "robojs/check/types.hpp"

namespace robojs::check {

using namespace lang;

namespace {

std::string describe_mask(TypeMask m) {
  switch (m) {
    case kNumber: return "a number";
    case kString: return "a string";
    case kFunction: return "a function";
    default: return "not a boolean";
  }
}

class PatternChecker {
 public:
  explicit PatternChecker(const Program& p) : program_(p), res_(p), types_(res_) {}

  Diagnostics run() {
    body(program_.body);
    return std::move(out_);
  }

 private:
  enum class Scan { NotFound, Found, Stop };

  void report(Category c, std::string message, const SourceSpan& span) {
    out_.push_back(Diagnostic{Phase::Static, c, std::move(message), span});
  }

  // --- traversal of every statement list ---------------------------------

  void body(const std::vector<StmtPtr>& list) {
    for (size_t i = 0; i < list.size(); ++i) {
      const Stmt& s = *list[i];
      if (const auto* l = s.as<LetDecl>(); l && !l->init) {
        uninitialized(s, list, i + 1);
      }
      stmt(s);
    }
  }

  void stmt(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, If>) {
            condition(*n.cond);
            nested(*n.then_branch);
            if (n.else_branch) nested(*n.else_branch);
          } else if constexpr (std::is_same_v<T, While>) {
            condition(*n.cond);
            nested(*n.body);
          } else if constexpr (std::is_same_v<T, For>) {
            if (n.cond) condition(*n.cond);
            nested(*n.body);
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            body(n.body);
          } else if constexpr (std::is_same_v<T, Block>) {
            body(n.body);
          }
        },
        s.node);
  }

  void nested(const Stmt& s) {
    if (const auto* b = s.as<Block>()) {
      body(b->body);
    } else {
      stmt(s);
    }
  }

  // --- conditions ---------------------------------------------------------

  void condition(const Expr& cond) {
    TypeMask t = types_.type_of(cond);
    if (t == 0 || (t & kBoolean)) return;
    if (strip_parens(cond).as<Assign>()) {
      report(Category::ConditionalAssignment,
             msg_conditional_assignment(describe_mask(t)), cond.span);
    } else {
      report(Category::NonBooleanCondition,
             msg_non_boolean_condition(describe_mask(t)), cond.span);
    }
  }

  // --- reads of `let x;` before any assignment ----------------------------

  void uninitialized(const Stmt& let, const std::vector<StmtPtr>& list,
                     size_t from) {
    const Declaration* d = res_.declaration_of(let);
    if (!d || d->written_from_other_function) return;
    decl_ = d;
    found_ = nullptr;
    for (size_t i = from; i < list.size(); ++i) {
      Scan r = scan(*list[i]);
      if (r == Scan::Found) {
        report(Category::UninitializedVariable, msg_uninitialized(d->name),
               found_span_);
        return;
      }
      if (r == Scan::Stop) return;
    }
  }

  bool mentions(const Stmt& s) const {
    for (const Expr* e : decl_->reads) {
      if (s.span.contains(e->span)) return true;
    }
    for (const Expr* e : decl_->writes) {
      if (s.span.contains(e->span)) return true;
    }
    return false;
  }

  Scan scan(const Stmt& s) {
    return std::visit(
        [&](const auto& n) -> Scan {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LetDecl>) {
            return n.init ? scan(*n.init) : Scan::NotFound;
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            return scan(*n.expr);
          } else if constexpr (std::is_same_v<T, If>) {
            Scan r = scan(*n.cond);
            if (r != Scan::NotFound) return r;
            r = scan(*n.then_branch);
            if (r != Scan::NotFound) return r;
            return n.else_branch ? scan(*n.else_branch) : Scan::NotFound;
          } else if constexpr (std::is_same_v<T, While>) {
            Scan r = scan(*n.cond);
            if (r != Scan::NotFound) return r;
            return mentions(*n.body) ? Scan::Stop : Scan::NotFound;
          } else if constexpr (std::is_same_v<T, For>) {
            if (n.init) {
              Scan r = scan(*n.init);
              if (r != Scan::NotFound) return r;
            }
            if (n.cond) {
              Scan r = scan(*n.cond);
              if (r != Scan::NotFound) return r;
            }
            return mentions(s) ? Scan::Stop : Scan::NotFound;
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            return Scan::NotFound;
          } else if constexpr (std::is_same_v<T, Return>) {
            if (n.value) {
              Scan r = scan(*n.value);
              if (r != Scan::NotFound) return r;
            }
            return Scan::Stop;
          } else {
            for (const auto& c : n.body) {
              Scan r = scan(*c);
              if (r != Scan::NotFound) return r;
            }
            return Scan::NotFound;
          }
        },
        s.node);
  }

  Scan scan(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> Scan {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Identifier>) {
            if (res_.lookup(e) == decl_) {
              found_ = &e;
              found_span_ = e.span;
              return Scan::Found;
            }
            return Scan::NotFound;
          } else if constexpr (std::is_same_v<T, Unary>) {
            return scan(*n.operand);
          } else if constexpr (std::is_same_v<T, Binary>) {
            Scan r = scan(*n.lhs);
            return r != Scan::NotFound ? r : scan(*n.rhs);
          } else if constexpr (std::is_same_v<T, Call>) {
            Scan r = scan(*n.callee);
            for (const auto& a : n.args) {
              if (r != Scan::NotFound) return r;
              r = scan(*a);
            }
            return r;
          } else if constexpr (std::is_same_v<T, Paren>) {
            return scan(*n.inner);
          } else if constexpr (std::is_same_v<T, Assign>) {
            bool target = res_.lookup(e) == decl_;
            if (target && n.op != AssignOp::Assign) {
              found_ = &e;
              found_span_ = n.target_span;
              return Scan::Found;
            }
            Scan r = scan(*n.value);
            if (r != Scan::NotFound) return r;
            return target ? Scan::Stop : Scan::NotFound;
          } else {
            return Scan::NotFound;
          }
        },
        e.node);
  }

  const Program& program_;
  Resolution res_;
  TypeInference types_;
  Diagnostics out_;
  const Declaration* decl_ = nullptr;
  const Expr* found_ = nullptr;
  SourceSpan found_span_;
};

}  // namespace

Diagnostics pattern_check(const Program& program) {
  return PatternChecker(program).run();
}

}  // namespace robojs::check
