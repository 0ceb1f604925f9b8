// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "robojs/lang/source_span.hpp"

namespace robojs::lang {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class UnaryOp { Negate, Not };

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  LooseEqual,
  LooseNotEqual,
  StrictEqual,
  StrictNotEqual,
  And,
  Or,
};

enum class AssignOp { Assign, Add, Sub, Mul, Div, Mod };

std::string_view symbol(UnaryOp op);
std::string_view symbol(BinaryOp op);
std::string_view symbol(AssignOp op);

/// The arithmetic operator behind a compound assignment (`+=` -> `+`).
BinaryOp arithmetic_of(AssignOp op);

bool is_arithmetic(BinaryOp op);
bool is_ordering(BinaryOp op);

struct NumberLit {
  double value = 0.0;
};
struct StringLit {
  std::string value;
};
struct BoolLit {
  bool value = false;
};
struct Identifier {
  std::string name;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Call {
  ExprPtr callee;
  std::vector<ExprPtr> args;
};
/// `namespace.name`; the receiver is always a builtin namespace.
struct Member {
  std::string ns;
  std::string name;
  SourceSpan name_span;
};
struct Paren {
  ExprPtr inner;
};
/// Assignment to a plain variable; usable as an expression.
struct Assign {
  AssignOp op;
  std::string target;
  SourceSpan target_span;
  ExprPtr value;
};

struct Expr {
  SourceSpan span;
  std::variant<NumberLit, StringLit, BoolLit, Identifier, Unary, Binary, Call,
               Member, Paren, Assign>
      node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

struct Param {
  std::string name;
  SourceSpan span;
};

struct LetDecl {
  std::string name;
  SourceSpan name_span;
  ExprPtr init;  // null for `let x;`
};
struct ExprStmt {
  ExprPtr expr;
};
struct If {
  ExprPtr cond;
  StmtPtr then_branch;
  StmtPtr else_branch;  // null when absent
};
struct While {
  ExprPtr cond;
  StmtPtr body;
};
struct For {
  StmtPtr init;   // LetDecl or ExprStmt, may be null
  ExprPtr cond;   // may be null
  ExprPtr update; // may be null
  StmtPtr body;
};
struct FunctionDecl {
  std::string name;
  SourceSpan name_span;
  std::vector<Param> params;
  std::vector<StmtPtr> body;
  std::string source_text;  // verbatim declaration text, for string coercion
};
struct Return {
  ExprPtr value;  // may be null
};
struct Block {
  std::vector<StmtPtr> body;
};

struct Stmt {
  SourceSpan span;
  std::variant<LetDecl, ExprStmt, If, While, For, FunctionDecl, Return, Block>
      node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

struct Program {
  std::string file_id;
  std::vector<StmtPtr> body;
};

ExprPtr make_expr(SourceSpan span, auto node) {
  return std::make_unique<Expr>(Expr{std::move(span), std::move(node)});
}

StmtPtr make_stmt(SourceSpan span, auto node) {
  return std::make_unique<Stmt>(Stmt{std::move(span), std::move(node)});
}

/// Unwraps any number of parentheses.
const Expr& strip_parens(const Expr& expr);

/// Builtin namespaces that may appear as the receiver of `.`.
bool is_builtin_namespace(std::string_view name);

}  // namespace robojs::lang
