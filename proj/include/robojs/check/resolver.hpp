// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "robojs/lang/ast.hpp"

namespace robojs::check {

/// A binding introduced by `let`, a parameter, or a function declaration.
struct Declaration {
  enum class Kind { Let, Param, Function };

  Kind kind = Kind::Let;
  std::string name;
  lang::SourceSpan name_span;
  const lang::Stmt* stmt = nullptr;      // the LetDecl or FunctionDecl
  const lang::Stmt* function = nullptr;  // enclosing function, null at top level
  std::vector<const lang::Expr*> writes; // Assign expressions targeting it
  std::vector<const lang::Expr*> reads;  // Identifier expressions and compound Assigns
  bool written_from_other_function = false;
};

/// Static name resolution mirroring the interpreter's scoping: block-scoped
/// `let` (visible in the whole block, in its temporal dead zone until the
/// declaration runs), hoisted function declarations, and parameters.
class Resolution {
 public:
  explicit Resolution(const lang::Program& program);

  /// Declaration referenced by an Identifier or an Assign target; null when
  /// the name is not declared anywhere in scope.
  const Declaration* lookup(const lang::Expr& expr) const;
  /// Function containing `expr`, null at top level.
  const lang::Stmt* function_of(const lang::Expr& expr) const;

  const std::vector<std::unique_ptr<Declaration>>& declarations() const {
    return decls_;
  }
  const Declaration* declaration_of(const lang::Stmt& stmt) const;

  /// A read that can never observe the temporal dead zone or `undefined`:
  /// a `let` that always holds a defined value read later in the same
  /// function, or a function declaration that is never reassigned.
  bool safe_read(const lang::Expr& identifier) const;
  /// A write that can never hit an undeclared name or the dead zone.
  bool safe_write(const lang::Expr& assign) const;

  /// Function declaration called by `callee` if that is statically certain.
  const lang::FunctionDecl* known_function(const lang::Expr& callee) const;

 private:
  friend class ResolverWalk;

  bool after_declaration(const lang::Expr& use, const Declaration& d) const;
  bool always_defined(const Declaration& d) const;

  std::vector<std::unique_ptr<Declaration>> decls_;
  std::unordered_map<const lang::Expr*, Declaration*> refs_;
  std::unordered_map<const lang::Expr*, const lang::Stmt*> functions_;
  std::unordered_map<const lang::Stmt*, Declaration*> by_stmt_;
  mutable std::unordered_map<const Declaration*, bool> defined_cache_;
};

/// Whether evaluating `expr` under strict semantics either aborts or yields
/// a value other than `undefined`.
bool never_undefined(const lang::Expr& expr);

}  // namespace robojs::check
