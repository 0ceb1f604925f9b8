// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "robojs/lang/ast.hpp"
#include "robojs/lang/diagnostic.hpp"
#include "robojs/lang/lexer.hpp"

namespace robojs::lang {

struct ParseResult {
  std::unique_ptr<Program> program;  // null whenever diagnostics is non-empty
  Diagnostics diagnostics;

  bool ok() const { return program != nullptr; }
};

/// Parses a token stream produced by tokenize(). `source` is only used to
/// capture the verbatim text of function declarations and may be empty.
/// Recovers at statement boundaries so that independent errors are each
/// reported once.
ParseResult parse(const std::vector<Token>& tokens, std::string_view source = {},
                  std::string file_id = {});

/// Parses a single expression (REPL input). A trailing `;` is allowed.
struct ExprParseResult {
  ExprPtr expr;
  Diagnostics diagnostics;
};
ExprParseResult parse_expression(std::string_view source,
                                 std::string file_id = "<repl>");

}  // namespace robojs::lang
