// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/resolver.hpp"

#include "robojs/api/manifest.hpp"

namespace robojs::check {

using namespace lang;

class ResolverWalk {
 public:
  explicit ResolverWalk(Resolution& r) : r_(r) {}

  void program(const Program& p) {
    push();
    predeclare(p.body);
    for (const auto& s : p.body) stmt(*s);
    pop();
  }

 private:
  using Scope = std::unordered_map<std::string, Declaration*>;

  void push() { scopes_.emplace_back(); }
  void pop() { scopes_.pop_back(); }

  Declaration* add(Declaration::Kind kind, const std::string& name,
                   const SourceSpan& span, const Stmt* s) {
    auto d = std::make_unique<Declaration>();
    d->kind = kind;
    d->name = name;
    d->name_span = span;
    d->stmt = s;
    d->function = function_;
    Declaration* raw = d.get();
    r_.decls_.push_back(std::move(d));
    scopes_.back()[name] = raw;
    if (s) r_.by_stmt_[s] = raw;
    return raw;
  }

  void predeclare(const std::vector<StmtPtr>& body) {
    for (const auto& s : body) {
      if (const auto* l = s->as<LetDecl>()) {
        add(Declaration::Kind::Let, l->name, l->name_span, s.get());
      } else if (const auto* f = s->as<FunctionDecl>()) {
        add(Declaration::Kind::Function, f->name, f->name_span, s.get());
      }
    }
  }

  Declaration* find(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    return nullptr;
  }

  void body(const Stmt& s) {
    if (const auto* b = s.as<Block>()) {
      push();
      predeclare(b->body);
      for (const auto& c : b->body) stmt(*c);
      pop();
    } else {
      stmt(s);
    }
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
            body(*n.then_branch);
            if (n.else_branch) body(*n.else_branch);
          } else if constexpr (std::is_same_v<T, While>) {
            expr(*n.cond);
            body(*n.body);
          } else if constexpr (std::is_same_v<T, For>) {
            push();
            if (n.init) {
              if (const auto* l = n.init->template as<LetDecl>()) {
                add(Declaration::Kind::Let, l->name, l->name_span, n.init.get());
              }
              stmt(*n.init);
            }
            if (n.cond) expr(*n.cond);
            if (n.update) expr(*n.update);
            body(*n.body);
            pop();
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            const Stmt* saved = function_;
            function_ = &s;
            push();
            for (const auto& p : n.params) {
              add(Declaration::Kind::Param, p.name, p.span, nullptr);
            }
            predeclare(n.body);
            for (const auto& c : n.body) stmt(*c);
            pop();
            function_ = saved;
          } else if constexpr (std::is_same_v<T, Return>) {
            if (n.value) expr(*n.value);
          } else {
            push();
            predeclare(n.body);
            for (const auto& c : n.body) stmt(*c);
            pop();
          }
        },
        s.node);
  }

  void expr(const Expr& e) {
    r_.functions_[&e] = function_;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Identifier>) {
            Declaration* d = find(n.name);
            r_.refs_[&e] = d;
            if (d) d->reads.push_back(&e);
          } else if constexpr (std::is_same_v<T, Unary>) {
            expr(*n.operand);
          } else if constexpr (std::is_same_v<T, Binary>) {
            expr(*n.lhs);
            expr(*n.rhs);
          } else if constexpr (std::is_same_v<T, Call>) {
            expr(*n.callee);
            for (const auto& a : n.args) expr(*a);
          } else if constexpr (std::is_same_v<T, Paren>) {
            expr(*n.inner);
          } else if constexpr (std::is_same_v<T, Assign>) {
            Declaration* d = find(n.target);
            r_.refs_[&e] = d;
            if (d) {
              d->writes.push_back(&e);
              if (n.op != AssignOp::Assign) d->reads.push_back(&e);
              if (d->function != function_) d->written_from_other_function = true;
            }
            expr(*n.value);
          }
        },
        e.node);
  }

  Resolution& r_;
  std::vector<Scope> scopes_;
  const Stmt* function_ = nullptr;
};

Resolution::Resolution(const Program& program) {
  ResolverWalk(*this).program(program);
}

const Declaration* Resolution::lookup(const Expr& expr) const {
  auto it = refs_.find(&expr);
  return it == refs_.end() ? nullptr : it->second;
}

const Stmt* Resolution::function_of(const Expr& expr) const {
  auto it = functions_.find(&expr);
  return it == functions_.end() ? nullptr : it->second;
}

const Declaration* Resolution::declaration_of(const Stmt& stmt) const {
  auto it = by_stmt_.find(&stmt);
  return it == by_stmt_.end() ? nullptr : it->second;
}

bool Resolution::after_declaration(const Expr& use, const Declaration& d) const {
  if (!d.stmt) return true;
  const SourceSpan& decl = d.stmt->span;
  const SourceSpan& at = use.span;
  return at.start_line > decl.end_line ||
         (at.start_line == decl.end_line && at.start_col >= decl.end_col);
}

bool never_undefined(const Expr& expr) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Call>) {
          // sense calls return numbers or abort
          if (const auto* m = n.callee->template as<Member>()) {
            if (m->ns != "robot") return false;
            const auto* entry = api::api_catalog().find(m->name);
            return entry && entry->result == api::ResultKind::Number;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Paren>) {
          return never_undefined(*n.inner);
        } else if constexpr (std::is_same_v<T, Binary>) {
          if (n.op == BinaryOp::And || n.op == BinaryOp::Or) {
            return never_undefined(*n.lhs) && never_undefined(*n.rhs);
          }
          return true;
        } else if constexpr (std::is_same_v<T, Assign>) {
          return n.op != AssignOp::Assign || never_undefined(*n.value);
        } else {
          // literals, members and checked operators; every variable read
          // either yields a defined value or aborts
          return true;
        }
      },
      expr.node);
}

bool Resolution::always_defined(const Declaration& d) const {
  if (d.kind != Declaration::Kind::Let) return false;
  auto cached = defined_cache_.find(&d);
  if (cached != defined_cache_.end()) return cached->second;
  bool ok = false;
  if (const auto* l = d.stmt ? d.stmt->as<LetDecl>() : nullptr) {
    ok = l->init && never_undefined(*l->init);
    for (const Expr* w : d.writes) {
      if (!ok) break;
      ok = never_undefined(*w);
    }
  }
  defined_cache_[&d] = ok;
  return ok;
}

bool Resolution::safe_read(const Expr& identifier) const {
  const Declaration* d = lookup(identifier);
  if (!d) return false;
  switch (d->kind) {
    case Declaration::Kind::Function:
      return d->writes.empty();
    case Declaration::Kind::Param:
      return false;
    case Declaration::Kind::Let:
      return always_defined(*d) && function_of(identifier) == d->function &&
             after_declaration(identifier, *d);
  }
  return false;
}

bool Resolution::safe_write(const Expr& assign) const {
  const Declaration* d = lookup(assign);
  if (!d) return false;
  if (d->kind != Declaration::Kind::Let) return true;
  return function_of(assign) == d->function && after_declaration(assign, *d);
}

const FunctionDecl* Resolution::known_function(const Expr& callee) const {
  const Expr& c = strip_parens(callee);
  if (!c.as<Identifier>()) return nullptr;
  const Declaration* d = lookup(c);
  if (!d || d->kind != Declaration::Kind::Function || !d->writes.empty()) {
    return nullptr;
  }
  return d->stmt->as<FunctionDecl>();
}

}  // namespace robojs::check
