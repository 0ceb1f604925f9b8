// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/printer.hpp"

#include <cmath>
#include <cstdio>

#include "robojs/lang/number_format.hpp"

namespace robojs::lang {

namespace {

enum Prec {
  kAssign = 1,
  kOr,
  kAnd,
  kEquality,
  kRelational,
  kAdditive,
  kMultiplicative,
  kUnary,
  kCall,
  kPrimary,
};

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return kOr;
    case BinaryOp::And: return kAnd;
    case BinaryOp::LooseEqual:
    case BinaryOp::LooseNotEqual:
    case BinaryOp::StrictEqual:
    case BinaryOp::StrictNotEqual: return kEquality;
    case BinaryOp::Less:
    case BinaryOp::LessEqual:
    case BinaryOp::Greater:
    case BinaryOp::GreaterEqual: return kRelational;
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdditive;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return kMultiplicative;
  }
  return kPrimary;
}

int precedence(const Expr& e) {
  if (e.as<Assign>()) return kAssign;
  if (const auto* b = e.as<Binary>()) return precedence(b->op);
  if (e.as<Unary>()) return kUnary;
  if (e.as<Call>()) return kCall;
  if (const auto* n = e.as<NumberLit>()) {
    if (std::signbit(n->value) && !std::isnan(n->value)) return kUnary;
  }
  return kPrimary;
}

std::string number_literal(double v) {
  if (std::isnan(v)) return "(0 / 0)";
  if (std::isinf(v)) return v < 0 ? "-1e999" : "1e999";
  if (v == 0 && std::signbit(v)) return "-0";
  return format_number(v);
}

std::string expr_at(const Expr& e, int min_prec);

std::string expr_text(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return number_literal(n.value);
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return quote(n.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Identifier>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Unary>) {
          std::string operand = expr_at(*n.operand, kUnary);
          std::string op(symbol(n.op));
          if (n.op == UnaryOp::Negate && !operand.empty() && operand[0] == '-') {
            op += ' ';
          }
          return op + operand;
        } else if constexpr (std::is_same_v<T, Binary>) {
          int p = precedence(n.op);
          return expr_at(*n.lhs, p) + " " + std::string(symbol(n.op)) + " " +
                 expr_at(*n.rhs, p + 1);
        } else if constexpr (std::is_same_v<T, Call>) {
          std::string out = expr_at(*n.callee, kCall) + "(";
          for (size_t i = 0; i < n.args.size(); ++i) {
            if (i > 0) out += ", ";
            out += expr_at(*n.args[i], kAssign);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, Member>) {
          return n.ns + "." + n.name;
        } else if constexpr (std::is_same_v<T, Paren>) {
          return "(" + expr_at(*n.inner, kAssign) + ")";
        } else {
          return n.target + " " + std::string(symbol(n.op)) + " " +
                 expr_at(*n.value, kAssign);
        }
      },
      e.node);
}

std::string expr_at(const Expr& e, int min_prec) {
  std::string text = expr_text(e);
  if (precedence(e) < min_prec) return "(" + text + ")";
  return text;
}

std::string pad(int indent) { return std::string(indent * 2, ' '); }

std::string block_text(const std::vector<StmtPtr>& body, int indent) {
  if (body.empty()) return "{}";
  std::string out = "{\n";
  for (const auto& s : body) out += print(*s, indent + 1) + "\n";
  return out + pad(indent) + "}";
}

// A branch or loop body, printed after its header on the same line.
std::string body_text(const Stmt& s, int indent) {
  if (const auto* b = s.as<Block>()) return block_text(b->body, indent);
  std::string inner = print(s, indent + 1);
  return "\n" + inner;
}

std::string let_text(const LetDecl& d) {
  std::string out = "let " + d.name;
  if (d.init) out += " = " + expr_at(*d.init, kAssign);
  return out;
}

bool ends_without_else(const Stmt& s) {
  const auto* i = s.as<If>();
  if (!i) return false;
  if (!i->else_branch) return true;
  return ends_without_else(*i->else_branch);
}

}  // namespace

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\v': out += "\\v"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out + "\"";
}

std::string print(const Expr& expr) { return expr_at(expr, kAssign); }

std::string print(const Stmt& stmt, int indent) {
  std::string p = pad(indent);
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LetDecl>) {
          return p + let_text(n) + ";";
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          return p + print(*n.expr) + ";";
        } else if constexpr (std::is_same_v<T, If>) {
          std::string out = p + "if (" + print(*n.cond) + ") ";
          if (n.else_branch && !n.then_branch->template as<Block>() &&
              ends_without_else(*n.then_branch)) {
            // keep the else attached to this if
            out += "{\n" + print(*n.then_branch, indent + 1) + "\n" + p + "}";
          } else {
            out += body_text(*n.then_branch, indent);
          }
          if (n.else_branch) {
            out += n.then_branch->template as<Block>() ? " " : "\n" + p;
            if (const auto* chained = n.else_branch->template as<If>()) {
              (void)chained;
              std::string rest = print(*n.else_branch, indent);
              out += "else " + rest.substr(p.size());
            } else {
              out += "else " + body_text(*n.else_branch, indent);
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, While>) {
          return p + "while (" + print(*n.cond) + ") " +
                 body_text(*n.body, indent);
        } else if constexpr (std::is_same_v<T, For>) {
          std::string init;
          if (n.init) {
            if (const auto* d = n.init->template as<LetDecl>()) {
              init = let_text(*d);
            } else if (const auto* e = n.init->template as<ExprStmt>()) {
              init = print(*e->expr);
            }
          }
          std::string out = p + "for (" + init + ";";
          if (n.cond) out += " " + print(*n.cond);
          out += ";";
          if (n.update) out += " " + print(*n.update);
          return out + ") " + body_text(*n.body, indent);
        } else if constexpr (std::is_same_v<T, FunctionDecl>) {
          std::string out = p + "function " + n.name + "(";
          for (size_t i = 0; i < n.params.size(); ++i) {
            if (i > 0) out += ", ";
            out += n.params[i].name;
          }
          return out + ") " + block_text(n.body, indent);
        } else if constexpr (std::is_same_v<T, Return>) {
          if (!n.value) return p + "return;";
          return p + "return " + print(*n.value) + ";";
        } else {
          return p + block_text(n.body, indent);
        }
      },
      stmt.node);
}

std::string print(const Program& program) {
  std::string out;
  for (const auto& s : program.body) out += print(*s, 0) + "\n";
  return out;
}

namespace {

std::string dump_number(double v) {
  if (v == 0 && std::signbit(v)) return "-0";
  return format_number(v);
}

std::string dump_list(const std::vector<StmtPtr>& body) {
  std::string out;
  for (const auto& s : body) out += " " + dump(*s);
  return out;
}

std::string dump_opt(const ExprPtr& e) { return e ? dump(*e) : "_"; }
std::string dump_opt(const StmtPtr& s) { return s ? dump(*s) : "_"; }

}  // namespace

std::string dump(const Expr& expr) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return "(num " + dump_number(n.value) + ")";
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return "(str " + quote(n.value) + ")";
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return n.value ? "(bool true)" : "(bool false)";
        } else if constexpr (std::is_same_v<T, Identifier>) {
          return "(id " + n.name + ")";
        } else if constexpr (std::is_same_v<T, Unary>) {
          return "(" + std::string(symbol(n.op)) + " " + dump(*n.operand) + ")";
        } else if constexpr (std::is_same_v<T, Binary>) {
          return "(" + std::string(symbol(n.op)) + " " + dump(*n.lhs) + " " +
                 dump(*n.rhs) + ")";
        } else if constexpr (std::is_same_v<T, Call>) {
          std::string out = "(call " + dump(*n.callee);
          for (const auto& a : n.args) out += " " + dump(*a);
          return out + ")";
        } else if constexpr (std::is_same_v<T, Member>) {
          return "(member " + n.ns + " " + n.name + ")";
        } else if constexpr (std::is_same_v<T, Paren>) {
          return "(paren " + dump(*n.inner) + ")";
        } else {
          return "(" + std::string(symbol(n.op)) + " " + n.target + " " +
                 dump(*n.value) + ")";
        }
      },
      expr.node);
}

std::string dump(const Stmt& stmt) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LetDecl>) {
          return "(let " + n.name + " " + dump_opt(n.init) + ")";
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          return "(expr " + dump(*n.expr) + ")";
        } else if constexpr (std::is_same_v<T, If>) {
          return "(if " + dump(*n.cond) + " " + dump(*n.then_branch) + " " +
                 dump_opt(n.else_branch) + ")";
        } else if constexpr (std::is_same_v<T, While>) {
          return "(while " + dump(*n.cond) + " " + dump(*n.body) + ")";
        } else if constexpr (std::is_same_v<T, For>) {
          return "(for " + dump_opt(n.init) + " " + dump_opt(n.cond) + " " +
                 dump_opt(n.update) + " " + dump(*n.body) + ")";
        } else if constexpr (std::is_same_v<T, FunctionDecl>) {
          std::string out = "(function " + n.name + " (";
          for (size_t i = 0; i < n.params.size(); ++i) {
            if (i > 0) out += " ";
            out += n.params[i].name;
          }
          return out + ")" + dump_list(n.body) + ")";
        } else if constexpr (std::is_same_v<T, Return>) {
          return "(return " + dump_opt(n.value) + ")";
        } else {
          return "(block" + dump_list(n.body) + ")";
        }
      },
      stmt.node);
}

std::string dump(const Program& program) {
  return "(program" + dump_list(program.body) + ")";
}

}  // namespace robojs::lang
