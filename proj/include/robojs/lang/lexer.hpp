// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robojs/lang/diagnostic.hpp"
#include "robojs/lang/source_span.hpp"

namespace robojs::lang {

enum class TokenKind {
  Number,
  String,
  Identifier,
  // keywords
  Let,
  If,
  Else,
  While,
  For,
  Function,
  Return,
  True,
  False,
  // punctuation
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Dot,
  // operators
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  EqualEqual,
  BangEqual,
  EqualEqualEqual,
  BangEqualEqual,
  AmpAmp,
  PipePipe,
  Bang,
  Assign,
  PlusAssign,
  MinusAssign,
  StarAssign,
  SlashAssign,
  PercentAssign,
  // valid JavaScript that RoboJS does not admit (`var`, `[`, `=>`, `++`, ...)
  Excluded,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;       // raw lexeme; decoded contents for strings
  double number = 0.0;    // value of Number tokens
  SourceSpan span;
  size_t begin = 0;       // byte offsets into the source
  size_t end = 0;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token on success
  std::optional<Diagnostic> error;

  bool ok() const { return !error.has_value(); }
};

LexResult tokenize(std::string_view source, std::string file_id = {});

std::string_view describe(TokenKind kind);

}  // namespace robojs::lang
