// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/lexer.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <utility>

namespace robojs::lang {

namespace {

constexpr std::array kKeywords = {
    std::pair{std::string_view{"let"}, TokenKind::Let},
    std::pair{std::string_view{"if"}, TokenKind::If},
    std::pair{std::string_view{"else"}, TokenKind::Else},
    std::pair{std::string_view{"while"}, TokenKind::While},
    std::pair{std::string_view{"for"}, TokenKind::For},
    std::pair{std::string_view{"function"}, TokenKind::Function},
    std::pair{std::string_view{"return"}, TokenKind::Return},
    std::pair{std::string_view{"true"}, TokenKind::True},
    std::pair{std::string_view{"false"}, TokenKind::False},
};

// Words that are meaningful JavaScript but outside the admitted subset.
constexpr std::array<std::string_view, 34> kExcludedWords = {
    "var",    "const",   "new",    "this",      "null",     "undefined",
    "class",  "typeof",  "break",  "continue",  "do",       "switch",
    "case",   "default", "try",    "catch",     "finally",  "throw",
    "delete", "in",      "of",     "instanceof", "void",    "yield",
    "async",  "await",   "import", "export",    "with",     "debugger",
    "super",  "extends", "NaN",    "Infinity"};

// Longest first so that maximal munch works by linear scan.
constexpr std::array kOperators = {
    std::pair{std::string_view{">>>="}, TokenKind::Excluded},
    std::pair{std::string_view{"==="}, TokenKind::EqualEqualEqual},
    std::pair{std::string_view{"!=="}, TokenKind::BangEqualEqual},
    std::pair{std::string_view{">>>"}, TokenKind::Excluded},
    std::pair{std::string_view{"**="}, TokenKind::Excluded},
    std::pair{std::string_view{"<<="}, TokenKind::Excluded},
    std::pair{std::string_view{">>="}, TokenKind::Excluded},
    std::pair{std::string_view{"..."}, TokenKind::Excluded},
    std::pair{std::string_view{"&&="}, TokenKind::Excluded},
    std::pair{std::string_view{"||="}, TokenKind::Excluded},
    std::pair{std::string_view{"?\?="}, TokenKind::Excluded},
    std::pair{std::string_view{"=="}, TokenKind::EqualEqual},
    std::pair{std::string_view{"!="}, TokenKind::BangEqual},
    std::pair{std::string_view{"<="}, TokenKind::LessEqual},
    std::pair{std::string_view{">="}, TokenKind::GreaterEqual},
    std::pair{std::string_view{"&&"}, TokenKind::AmpAmp},
    std::pair{std::string_view{"||"}, TokenKind::PipePipe},
    std::pair{std::string_view{"+="}, TokenKind::PlusAssign},
    std::pair{std::string_view{"-="}, TokenKind::MinusAssign},
    std::pair{std::string_view{"*="}, TokenKind::StarAssign},
    std::pair{std::string_view{"/="}, TokenKind::SlashAssign},
    std::pair{std::string_view{"%="}, TokenKind::PercentAssign},
    std::pair{std::string_view{"=>"}, TokenKind::Excluded},
    std::pair{std::string_view{"++"}, TokenKind::Excluded},
    std::pair{std::string_view{"--"}, TokenKind::Excluded},
    std::pair{std::string_view{"**"}, TokenKind::Excluded},
    std::pair{std::string_view{"<<"}, TokenKind::Excluded},
    std::pair{std::string_view{">>"}, TokenKind::Excluded},
    std::pair{std::string_view{"&="}, TokenKind::Excluded},
    std::pair{std::string_view{"|="}, TokenKind::Excluded},
    std::pair{std::string_view{"^="}, TokenKind::Excluded},
    std::pair{std::string_view{"?."}, TokenKind::Excluded},
    std::pair{std::string_view{"??"}, TokenKind::Excluded},
    std::pair{std::string_view{"("}, TokenKind::LParen},
    std::pair{std::string_view{")"}, TokenKind::RParen},
    std::pair{std::string_view{"{"}, TokenKind::LBrace},
    std::pair{std::string_view{"}"}, TokenKind::RBrace},
    std::pair{std::string_view{","}, TokenKind::Comma},
    std::pair{std::string_view{";"}, TokenKind::Semicolon},
    std::pair{std::string_view{"."}, TokenKind::Dot},
    std::pair{std::string_view{"+"}, TokenKind::Plus},
    std::pair{std::string_view{"-"}, TokenKind::Minus},
    std::pair{std::string_view{"*"}, TokenKind::Star},
    std::pair{std::string_view{"/"}, TokenKind::Slash},
    std::pair{std::string_view{"%"}, TokenKind::Percent},
    std::pair{std::string_view{"<"}, TokenKind::Less},
    std::pair{std::string_view{">"}, TokenKind::Greater},
    std::pair{std::string_view{"!"}, TokenKind::Bang},
    std::pair{std::string_view{"="}, TokenKind::Assign},
    std::pair{std::string_view{"["}, TokenKind::Excluded},
    std::pair{std::string_view{"]"}, TokenKind::Excluded},
    std::pair{std::string_view{"?"}, TokenKind::Excluded},
    std::pair{std::string_view{":"}, TokenKind::Excluded},
    std::pair{std::string_view{"&"}, TokenKind::Excluded},
    std::pair{std::string_view{"|"}, TokenKind::Excluded},
    std::pair{std::string_view{"^"}, TokenKind::Excluded},
    std::pair{std::string_view{"~"}, TokenKind::Excluded},
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_part(char c) { return is_ident_start(c) || is_digit(c); }

void append_utf8(std::string& out, unsigned code) {
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xC0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  }
}

int hex_value(char c) {
  if (is_digit(c)) return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

class Lexer {
 public:
  Lexer(std::string_view source, std::string file_id)
      : src_(source), file_id_(std::move(file_id)) {}

  LexResult run() {
    LexResult result;
    while (true) {
      skip_trivia();
      if (error_) break;
      if (pos_ >= src_.size()) break;
      if (!lex_token(result.tokens)) break;
    }
    if (error_) {
      result.error = std::move(error_);
      result.tokens.clear();
      return result;
    }
    Token end;
    end.kind = TokenKind::End;
    end.span = SourceSpan{file_id_, line_, col_, line_, col_};
    end.begin = end.end = pos_;
    result.tokens.push_back(std::move(end));
    return result;
  }

 private:
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not UTF-8 continuation bytes
    }
    ++pos_;
  }

  void fail(Category category, std::string message, int line, int col) {
    error_ = Diagnostic{Phase::Syntax, category, std::move(message),
                        SourceSpan{file_id_, line, col, line_, col_}};
    if (error_->span.end_line == line && error_->span.end_col <= col) {
      error_->span.end_col = col + 1;
    }
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
          c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        int line = line_, col = col_;
        advance();
        advance();
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) {
          advance();
        }
        if (pos_ >= src_.size()) {
          fail(Category::UnterminatedString, "unterminated block comment",
               line, col);
          return;
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  bool lex_token(std::vector<Token>& out) {
    int line = line_, col = col_;
    size_t start = pos_;
    char c = peek();
    Token tok;
    if (is_ident_start(c)) {
      while (is_ident_part(peek())) advance();
      tok.text = std::string(src_.substr(start, pos_ - start));
      tok.kind = TokenKind::Identifier;
      for (const auto& [word, kind] : kKeywords) {
        if (tok.text == word) tok.kind = kind;
      }
      for (auto word : kExcludedWords) {
        if (tok.text == word) tok.kind = TokenKind::Excluded;
      }
    } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      lex_number(tok);
    } else if (c == '"' || c == '\'') {
      if (!lex_string(tok)) return false;
    } else {
      bool matched = false;
      for (const auto& [text, kind] : kOperators) {
        if (src_.substr(pos_, text.size()) == text) {
          for (size_t i = 0; i < text.size(); ++i) advance();
          tok.kind = kind;
          tok.text = std::string(text);
          matched = true;
          break;
        }
      }
      if (!matched) {
        std::string shown(1, c);
        if (static_cast<unsigned char>(c) >= 0x80 || c < 0x20) {
          shown = "non-ASCII or control character";
        }
        fail(Category::IllegalCharacter,
             "illegal character '" + shown + "'", line, col);
        return false;
      }
    }
    tok.span = SourceSpan{file_id_, line, col, line_, col_};
    tok.begin = start;
    tok.end = pos_;
    out.push_back(std::move(tok));
    return true;
  }

  void lex_number(Token& tok) {
    size_t start = pos_;
    bool legacy_octal = peek() == '0' && is_digit(peek(1));
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) ||
         ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (is_digit(peek())) advance();
    }
    tok.text = std::string(src_.substr(start, pos_ - start));
    if (legacy_octal ||
        ((tok.text == "0") && (peek() == 'x' || peek() == 'X' ||
                               peek() == 'b' || peek() == 'o'))) {
      // `010` and `0x1F` style literals are outside the subset
      while (is_ident_part(peek())) advance();
      tok.text = std::string(src_.substr(start, pos_ - start));
      tok.kind = TokenKind::Excluded;
      return;
    }
    tok.kind = TokenKind::Number;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, tok.number);
    if (ec == std::errc::result_out_of_range) {
      // from_chars reports overflow; JavaScript rounds to Infinity or zero
      tok.number = std::strtod(tok.text.c_str(), nullptr);
    }
  }

  bool lex_string(Token& tok) {
    int line = line_, col = col_;
    char quote = peek();
    advance();
    std::string value;
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n' || peek() == '\r') {
        fail(Category::UnterminatedString, "unterminated string literal",
             line, col);
        return false;
      }
      char c = peek();
      if (c == quote) {
        advance();
        break;
      }
      if (c != '\\') {
        value += c;
        advance();
        continue;
      }
      advance();
      if (pos_ >= src_.size()) continue;  // reported as unterminated
      char e = peek();
      switch (e) {
        case 'n': value += '\n'; advance(); break;
        case 't': value += '\t'; advance(); break;
        case 'r': value += '\r'; advance(); break;
        case 'b': value += '\b'; advance(); break;
        case 'f': value += '\f'; advance(); break;
        case 'v': value += '\v'; advance(); break;
        case '0':
          value += '\0';
          advance();
          break;
        case 'x': {
          int hi = hex_value(peek(1)), lo = hex_value(peek(2));
          if (hi < 0 || lo < 0) {
            value += 'x';
            advance();
            break;
          }
          advance(); advance(); advance();
          append_utf8(value, static_cast<unsigned>(hi * 16 + lo));
          break;
        }
        case 'u': {
          unsigned code = 0;
          bool good = true;
          for (int i = 1; i <= 4; ++i) {
            int h = hex_value(peek(i));
            if (h < 0) good = false;
            code = code * 16 + static_cast<unsigned>(h < 0 ? 0 : h);
          }
          if (!good) {
            value += 'u';
            advance();
            break;
          }
          for (int i = 0; i < 5; ++i) advance();
          append_utf8(value, code);
          break;
        }
        case '\n':
          advance();  // line continuation
          break;
        default:
          value += e;
          advance();
          break;
      }
    }
    tok.kind = TokenKind::String;
    tok.text = std::move(value);
    return true;
  }

  std::string_view src_;
  std::string file_id_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Diagnostic> error_;
};

}  // namespace

LexResult tokenize(std::string_view source, std::string file_id) {
  return Lexer(source, std::move(file_id)).run();
}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Let: return "'let'";
    case TokenKind::If: return "'if'";
    case TokenKind::Else: return "'else'";
    case TokenKind::While: return "'while'";
    case TokenKind::For: return "'for'";
    case TokenKind::Function: return "'function'";
    case TokenKind::Return: return "'return'";
    case TokenKind::True: return "'true'";
    case TokenKind::False: return "'false'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::Less: return "'<'";
    case TokenKind::LessEqual: return "'<='";
    case TokenKind::Greater: return "'>'";
    case TokenKind::GreaterEqual: return "'>='";
    case TokenKind::EqualEqual: return "'=='";
    case TokenKind::BangEqual: return "'!='";
    case TokenKind::EqualEqualEqual: return "'==='";
    case TokenKind::BangEqualEqual: return "'!=='";
    case TokenKind::AmpAmp: return "'&&'";
    case TokenKind::PipePipe: return "'||'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Assign: return "'='";
    case TokenKind::PlusAssign: return "'+='";
    case TokenKind::MinusAssign: return "'-='";
    case TokenKind::StarAssign: return "'*='";
    case TokenKind::SlashAssign: return "'/='";
    case TokenKind::PercentAssign: return "'%='";
    case TokenKind::Excluded: return "excluded token";
    case TokenKind::End: return "end of file";
  }
  return "token";
}

}  // namespace robojs::lang
