// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/parser.hpp"

#include <unordered_set>

#include "robojs/lang/runtime_names.hpp"

namespace robojs::lang {

namespace {

constexpr int kMaxNesting = 200;

std::string position_of(const SourceSpan& span) {
  return std::to_string(span.start_line) + ":" + std::to_string(span.start_col);
}

std::string excluded_message(const Token& tok) {
  const std::string& t = tok.text;
  if (t == "var" || t == "const") {
    return "'" + t + "' is not part of RoboJS; declare variables with 'let'";
  }
  if (t == "++" || t == "--") {
    return "'" + t + "' is not part of RoboJS; write 'x += 1' or 'x -= 1'";
  }
  if (t == "[" || t == "]") return "arrays are not part of RoboJS";
  if (t == "=>") return "arrow functions are not part of RoboJS";
  if (t == "?" || t == ":") {
    return "the conditional operator '?:' is not part of RoboJS; use if/else";
  }
  if (!t.empty() && t[0] >= '0' && t[0] <= '9') {
    return "the number literal '" + t + "' is not part of RoboJS";
  }
  return "'" + t + "' is not part of RoboJS";
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::string_view source,
         std::string file_id)
      : toks_(tokens), source_(source), file_id_(std::move(file_id)) {}

  ParseResult parse_program() {
    auto program = std::make_unique<Program>();
    program->file_id = file_id_;
    ScopeGuard scope(*this);
    while (!at(TokenKind::End)) {
      if (at(TokenKind::RBrace)) {
        record(Category::MismatchedBracket, "unmatched '}'", cur().span);
        advance();
        continue;
      }
      parse_into(program->body, /*allow_functions=*/true);
    }
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (result.diagnostics.empty()) result.program = std::move(program);
    return result;
  }

  ExprParseResult parse_single_expression() {
    ExprParseResult result;
    try {
      auto expr = parse_expr();
      if (at(TokenKind::Semicolon)) advance();
      if (!at(TokenKind::End)) unexpected("end of expression");
      result.expr = std::move(expr);
    } catch (const Abort&) {
    }
    result.diagnostics = std::move(diags_);
    if (!result.diagnostics.empty()) result.expr.reset();
    return result;
  }

 private:
  struct Abort {};

  // --- token access -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& prev() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool at(TokenKind k) const { return cur().kind == k; }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }
  bool match(TokenKind k) {
    if (!at(k)) return false;
    advance();
    return true;
  }

  SourceSpan from(const SourceSpan& start) const {
    return SourceSpan::cover(start, prev().span);
  }

  // Span just after the previous token, where a missing token belongs.
  SourceSpan after_prev() const {
    const auto& p = prev().span;
    return SourceSpan{file_id_, p.end_line, p.end_col, p.end_line,
                      p.end_col + 1};
  }

  // --- diagnostics ----------------------------------------------------------

  void record(Category c, std::string message, SourceSpan span) {
    diags_.push_back(
        Diagnostic{Phase::Syntax, c, std::move(message), std::move(span)});
  }

  [[noreturn]] void fail(Category c, std::string message, SourceSpan span) {
    record(c, std::move(message), std::move(span));
    throw Abort{};
  }

  [[noreturn]] void unexpected(std::string_view expected) {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Excluded:
        fail(Category::NotInRoboJS, excluded_message(t), t.span);
      case TokenKind::RParen:
        fail(Category::MismatchedBracket, "unmatched ')'", t.span);
      case TokenKind::RBrace:
        fail(Category::MismatchedBracket, "unexpected '}'", t.span);
      case TokenKind::End:
        fail(Category::UnexpectedToken,
             "unexpected end of file; expected " + std::string(expected),
             t.span);
      default:
        fail(Category::UnexpectedToken,
             "expected " + std::string(expected) + " but found " +
                 (t.kind == TokenKind::Identifier || t.kind == TokenKind::Number
                      ? "'" + t.text + "'"
                      : std::string(describe(t.kind))),
             t.span);
    }
  }

  void expect_semicolon() {
    if (match(TokenKind::Semicolon)) return;
    if (at(TokenKind::RParen) || at(TokenKind::Excluded)) unexpected("';'");
    if (at(TokenKind::End) || at(TokenKind::RBrace) ||
        cur().span.start_line > prev().span.end_line) {
      // The statement plausibly ends here; keep parsing from the next one.
      record(Category::MissingSemicolon, "missing ';' after statement",
             after_prev());
      return;
    }
    fail(Category::MissingSemicolon, "missing ';' after statement",
         after_prev());
  }

  void expect_close_paren(const Token& open) {
    if (match(TokenKind::RParen)) return;
    if (at(TokenKind::Excluded)) unexpected("')'");
    fail(Category::MismatchedBracket,
         "missing ')' to close '(' opened at " + position_of(open.span),
         open.span);
  }

  void expect_open_paren(std::string_view after) {
    if (match(TokenKind::LParen)) return;
    unexpected("'(' after '" + std::string(after) + "'");
  }

  // --- scopes ---------------------------------------------------------------

  struct ScopeGuard {
    explicit ScopeGuard(Parser& p) : p(p) { p.scopes_.emplace_back(); }
    ~ScopeGuard() { p.scopes_.pop_back(); }
    Parser& p;
  };

  struct FunctionGuard {
    explicit FunctionGuard(Parser& p) : p(p) { ++p.function_depth_; }
    ~FunctionGuard() { --p.function_depth_; }
    Parser& p;
  };

  void declare(const std::string& name, const SourceSpan& span) {
    if (is_builtin_namespace(name) || rt::is_check_function(name)) {
      record(Category::InvalidDeclaration,
             "'" + name + "' is a reserved name and cannot be declared", span);
      return;
    }
    if (!scopes_.back().insert(name).second) {
      record(Category::Redeclaration,
             "redeclaration of '" + name + "' in the same scope", span);
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxNesting) {
        p.fail(Category::UnexpectedToken, "program is nested too deeply",
               p.cur().span);
      }
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  // --- statements -----------------------------------------------------------

  // Parses one statement into `out`, recovering from errors.
  void parse_into(std::vector<StmtPtr>& out, bool allow_functions) {
    size_t start = pos_;
    try {
      out.push_back(parse_statement(allow_functions, /*single=*/false));
    } catch (const Abort&) {
      synchronize(start);
    }
  }

  void synchronize(size_t statement_start) {
    if (pos_ == statement_start && !at(TokenKind::End) &&
        !at(TokenKind::RBrace)) {
      advance();
    }
    int depth = 0;
    while (!at(TokenKind::End)) {
      if (at(TokenKind::LBrace)) {
        ++depth;
      } else if (at(TokenKind::RBrace)) {
        if (depth == 0) return;
        --depth;
        advance();
        if (depth == 0) return;
        continue;
      } else if (at(TokenKind::Semicolon) && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  StmtPtr parse_statement(bool allow_functions, bool single) {
    DepthGuard guard(*this);
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Let:
        if (single) {
          fail(Category::InvalidDeclaration,
               "a 'let' declaration must be inside a block { ... }", t.span);
        }
        return parse_let(/*needs_semicolon=*/true);
      case TokenKind::If:
        return parse_if();
      case TokenKind::While:
        return parse_while();
      case TokenKind::For:
        return parse_for();
      case TokenKind::Function:
        if (!allow_functions || single) {
          fail(Category::InvalidDeclaration,
               "functions can only be declared at the top level of a program "
               "or function",
               t.span);
        }
        return parse_function();
      case TokenKind::Return:
        return parse_return();
      case TokenKind::LBrace: {
        ScopeGuard scope(*this);
        return parse_block();
      }
      case TokenKind::Semicolon:
        advance();
        return make_stmt(t.span, Block{});
      case TokenKind::Else:
        fail(Category::UnexpectedToken, "'else' without a matching 'if'",
             t.span);
      case TokenKind::Excluded:
        unexpected("a statement");
      default:
        break;
    }
    SourceSpan start = t.span;
    auto expr = parse_expr();
    expect_semicolon();
    return make_stmt(from(start), ExprStmt{std::move(expr)});
  }

  StmtPtr parse_let(bool needs_semicolon) {
    SourceSpan start = advance().span;  // let
    if (!at(TokenKind::Identifier)) unexpected("a variable name after 'let'");
    const Token& name = advance();
    ExprPtr init;
    if (match(TokenKind::Assign)) init = parse_expr();
    // declared after the initializer, matching scoping of `let x = x;`
    declare(name.text, name.span);
    if (needs_semicolon) expect_semicolon();
    return make_stmt(from(start), LetDecl{name.text, name.span, std::move(init)});
  }

  // `{ ... }`; the caller manages the scope.
  StmtPtr parse_block() {
    const Token& open = advance();
    Block block;
    while (!at(TokenKind::RBrace)) {
      if (at(TokenKind::End)) {
        fail(Category::MismatchedBracket,
             "missing '}' to close '{' opened at " + position_of(open.span),
             open.span);
      }
      parse_into(block.body, /*allow_functions=*/false);
    }
    advance();
    return make_stmt(from(open.span), std::move(block));
  }

  StmtPtr parse_body() {
    if (at(TokenKind::LBrace)) {
      ScopeGuard scope(*this);
      return parse_block();
    }
    return parse_statement(/*allow_functions=*/false, /*single=*/true);
  }

  ExprPtr parse_condition(std::string_view keyword) {
    expect_open_paren(keyword);
    const Token& open = prev();
    auto cond = parse_expr();
    expect_close_paren(open);
    return cond;
  }

  StmtPtr parse_if() {
    SourceSpan start = advance().span;
    auto cond = parse_condition("if");
    auto then_branch = parse_body();
    StmtPtr else_branch;
    if (at(TokenKind::Else)) {
      const Token& else_tok = advance();
      if (at(TokenKind::LParen)) {
        fail(Category::ElseWithCondition,
             "'else' cannot have a condition; did you mean 'else if (...)'?",
             SourceSpan::cover(else_tok.span, cur().span));
      }
      if (at(TokenKind::If)) {
        else_branch = parse_if();
      } else {
        else_branch = parse_body();
      }
    }
    return make_stmt(from(start), If{std::move(cond), std::move(then_branch),
                                     std::move(else_branch)});
  }

  StmtPtr parse_while() {
    SourceSpan start = advance().span;
    auto cond = parse_condition("while");
    auto body = parse_body();
    return make_stmt(from(start), While{std::move(cond), std::move(body)});
  }

  StmtPtr parse_for() {
    SourceSpan start = advance().span;
    expect_open_paren("for");
    const Token& open = prev();
    ScopeGuard scope(*this);
    For loop;
    if (at(TokenKind::Let)) {
      loop.init = parse_let(/*needs_semicolon=*/false);
    } else if (!at(TokenKind::Semicolon)) {
      SourceSpan s = cur().span;
      auto e = parse_expr();
      loop.init = make_stmt(from(s), ExprStmt{std::move(e)});
    }
    if (!match(TokenKind::Semicolon)) unexpected("';' in for loop header");
    if (!at(TokenKind::Semicolon)) loop.cond = parse_expr();
    if (!match(TokenKind::Semicolon)) unexpected("';' in for loop header");
    if (!at(TokenKind::RParen)) loop.update = parse_expr();
    expect_close_paren(open);
    loop.body = parse_body();
    return make_stmt(from(start), std::move(loop));
  }

  StmtPtr parse_function() {
    const Token& kw = advance();
    if (!at(TokenKind::Identifier)) unexpected("a function name");
    const Token& name = advance();
    declare(name.text, name.span);
    expect_open_paren("function " + name.text);
    const Token& open = prev();
    FunctionDecl fn;
    fn.name = name.text;
    fn.name_span = name.span;
    ScopeGuard scope(*this);
    if (!at(TokenKind::RParen)) {
      while (true) {
        if (!at(TokenKind::Identifier)) unexpected("a parameter name");
        const Token& p = advance();
        declare(p.text, p.span);
        fn.params.push_back(Param{p.text, p.span});
        if (!match(TokenKind::Comma)) break;
      }
    }
    expect_close_paren(open);
    if (!at(TokenKind::LBrace)) unexpected("'{' to start the function body");
    const Token& brace = advance();
    FunctionGuard in_function(*this);
    while (!at(TokenKind::RBrace)) {
      if (at(TokenKind::End)) {
        fail(Category::MismatchedBracket,
             "missing '}' to close '{' opened at " + position_of(brace.span),
             brace.span);
      }
      parse_into(fn.body, /*allow_functions=*/true);
    }
    advance();
    if (!source_.empty() && prev().end <= source_.size()) {
      fn.source_text =
          std::string(source_.substr(kw.begin, prev().end - kw.begin));
    }
    return make_stmt(from(kw.span), std::move(fn));
  }

  StmtPtr parse_return() {
    const Token& kw = advance();
    if (function_depth_ == 0) {
      fail(Category::InvalidDeclaration, "'return' outside of a function",
           kw.span);
    }
    ExprPtr value;
    if (!at(TokenKind::Semicolon) && !at(TokenKind::RBrace) &&
        !at(TokenKind::End)) {
      value = parse_expr();
    }
    expect_semicolon();
    return make_stmt(from(kw.span), Return{std::move(value)});
  }

  // --- expressions ----------------------------------------------------------

  ExprPtr parse_expr() { return parse_assignment(); }

  ExprPtr parse_assignment() {
    DepthGuard guard(*this);
    auto lhs = parse_binary(0);
    AssignOp op;
    switch (cur().kind) {
      case TokenKind::Assign: op = AssignOp::Assign; break;
      case TokenKind::PlusAssign: op = AssignOp::Add; break;
      case TokenKind::MinusAssign: op = AssignOp::Sub; break;
      case TokenKind::StarAssign: op = AssignOp::Mul; break;
      case TokenKind::SlashAssign: op = AssignOp::Div; break;
      case TokenKind::PercentAssign: op = AssignOp::Mod; break;
      default:
        return lhs;
    }
    const Token& op_tok = advance();
    const auto* target = lhs->as<Identifier>();
    if (target == nullptr) {
      if (lhs->as<Member>() != nullptr) {
        fail(Category::NotInRoboJS,
             "cannot assign to a member of a builtin namespace", lhs->span);
      }
      fail(Category::UnexpectedToken,
           "the left side of '" + op_tok.text + "' must be a variable",
           lhs->span);
    }
    auto value = parse_assignment();
    SourceSpan span = SourceSpan::cover(lhs->span, value->span);
    return make_expr(span, Assign{op, target->name, lhs->span, std::move(value)});
  }

  struct BinaryLevel {
    TokenKind token;
    BinaryOp op;
    int level;
  };

  static constexpr BinaryLevel kBinary[] = {
      {TokenKind::PipePipe, BinaryOp::Or, 0},
      {TokenKind::AmpAmp, BinaryOp::And, 1},
      {TokenKind::EqualEqual, BinaryOp::LooseEqual, 2},
      {TokenKind::BangEqual, BinaryOp::LooseNotEqual, 2},
      {TokenKind::EqualEqualEqual, BinaryOp::StrictEqual, 2},
      {TokenKind::BangEqualEqual, BinaryOp::StrictNotEqual, 2},
      {TokenKind::Less, BinaryOp::Less, 3},
      {TokenKind::LessEqual, BinaryOp::LessEqual, 3},
      {TokenKind::Greater, BinaryOp::Greater, 3},
      {TokenKind::GreaterEqual, BinaryOp::GreaterEqual, 3},
      {TokenKind::Plus, BinaryOp::Add, 4},
      {TokenKind::Minus, BinaryOp::Sub, 4},
      {TokenKind::Star, BinaryOp::Mul, 5},
      {TokenKind::Slash, BinaryOp::Div, 5},
      {TokenKind::Percent, BinaryOp::Mod, 5},
  };
  static constexpr int kUnaryLevel = 6;

  const BinaryLevel* binary_at(int level) const {
    for (const auto& b : kBinary) {
      if (b.level == level && b.token == cur().kind) return &b;
    }
    return nullptr;
  }

  ExprPtr parse_binary(int level) {
    if (level == kUnaryLevel) return parse_unary();
    auto lhs = parse_binary(level + 1);
    while (const BinaryLevel* b = binary_at(level)) {
      advance();
      auto rhs = parse_binary(level + 1);
      SourceSpan span = SourceSpan::cover(lhs->span, rhs->span);
      lhs = make_expr(span, Binary{b->op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    DepthGuard guard(*this);
    const Token& t = cur();
    if (t.kind == TokenKind::Minus || t.kind == TokenKind::Bang) {
      advance();
      auto operand = parse_unary();
      SourceSpan span = SourceSpan::cover(t.span, operand->span);
      UnaryOp op = t.kind == TokenKind::Minus ? UnaryOp::Negate : UnaryOp::Not;
      return make_expr(span, Unary{op, std::move(operand)});
    }
    if (t.kind == TokenKind::Plus) {
      fail(Category::NotInRoboJS, "unary '+' is not part of RoboJS", t.span);
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    auto expr = parse_primary();
    while (true) {
      if (at(TokenKind::LParen)) {
        const Token& open = advance();
        std::vector<ExprPtr> args;
        if (!at(TokenKind::RParen)) {
          while (true) {
            args.push_back(parse_expr());
            if (match(TokenKind::Comma)) continue;
            if (at(TokenKind::RParen)) break;
            if (at(TokenKind::Semicolon) || at(TokenKind::LBrace) ||
                at(TokenKind::RBrace) || at(TokenKind::End)) {
              expect_close_paren(open);
            }
            unexpected("',' or ')'");
          }
        }
        advance();
        SourceSpan span = from(expr->span);
        expr = make_expr(span, Call{std::move(expr), std::move(args)});
      } else if (at(TokenKind::Dot)) {
        fail(Category::NotInRoboJS,
             "'.' can only follow a builtin namespace such as robot or console",
             cur().span);
      } else {
        return expr;
      }
    }
  }

  ExprPtr parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Number:
        advance();
        return make_expr(t.span, NumberLit{t.number});
      case TokenKind::String:
        advance();
        return make_expr(t.span, StringLit{t.text});
      case TokenKind::True:
      case TokenKind::False:
        advance();
        return make_expr(t.span, BoolLit{t.kind == TokenKind::True});
      case TokenKind::Identifier:
        return parse_identifier();
      case TokenKind::LParen: {
        if (arrow_ahead()) {
          fail(Category::NotInRoboJS, "arrow functions are not part of RoboJS",
               t.span);
        }
        const Token& open = advance();
        auto inner = parse_expr();
        expect_close_paren(open);
        return make_expr(from(open.span), Paren{std::move(inner)});
      }
      case TokenKind::LBrace:
        fail(Category::NotInRoboJS, "object literals are not part of RoboJS",
             t.span);
      case TokenKind::Function:
        fail(Category::NotInRoboJS,
             "function expressions are not part of RoboJS; declare the "
             "function with a name instead",
             t.span);
      default:
        unexpected("an expression");
    }
  }

  // True when the parenthesis at the cursor closes right before `=>`.
  bool arrow_ahead() const {
    int depth = 0;
    for (size_t i = pos_; i < toks_.size(); ++i) {
      TokenKind k = toks_[i].kind;
      if (k == TokenKind::LParen) ++depth;
      if (k == TokenKind::RParen && --depth == 0) {
        return i + 1 < toks_.size() && toks_[i + 1].text == "=>";
      }
      if (k == TokenKind::End || k == TokenKind::Semicolon) return false;
    }
    return false;
  }

  ExprPtr parse_identifier() {
    const Token& t = advance();
    if (!is_builtin_namespace(t.text)) {
      return make_expr(t.span, Identifier{t.text});
    }
    if (!at(TokenKind::Dot)) {
      fail(Category::NotInRoboJS,
           "'" + t.text + "' can only be used as " + t.text + ".<name>",
           t.span);
    }
    advance();
    if (!at(TokenKind::Identifier)) unexpected("a name after '.'");
    const Token& name = advance();
    if (at(TokenKind::Dot)) {
      fail(Category::NotInRoboJS, "nested member access is not part of RoboJS",
           cur().span);
    }
    return make_expr(SourceSpan::cover(t.span, name.span),
                     Member{t.text, name.text, name.span});
  }

  const std::vector<Token>& toks_;
  std::string_view source_;
  std::string file_id_;
  size_t pos_ = 0;
  int depth_ = 0;
  int function_depth_ = 0;
  std::vector<std::unordered_set<std::string>> scopes_;
  Diagnostics diags_;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens, std::string_view source,
                  std::string file_id) {
  if (tokens.empty() || tokens.back().kind != TokenKind::End) {
    ParseResult r;
    r.diagnostics.push_back(Diagnostic{Phase::Syntax, Category::UnexpectedToken,
                                       "token stream is not terminated",
                                       SourceSpan{file_id, 1, 1, 1, 1}});
    return r;
  }
  return Parser(tokens, source, std::move(file_id)).parse_program();
}

ExprParseResult parse_expression(std::string_view source, std::string file_id) {
  auto lexed = tokenize(source, file_id);
  if (!lexed.ok()) {
    ExprParseResult r;
    r.diagnostics.push_back(*lexed.error);
    return r;
  }
  return Parser(lexed.tokens, source, std::move(file_id))
      .parse_single_expression();
}

}  // namespace robojs::lang
