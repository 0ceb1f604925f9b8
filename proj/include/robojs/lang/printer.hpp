// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "robojs/lang/ast.hpp"

namespace robojs::lang {

/// Renders source text that parses back to an equivalent tree. Parentheses
/// are inserted only where precedence demands them.
std::string print(const Program& program);
std::string print(const Stmt& stmt, int indent = 0);
std::string print(const Expr& expr);

/// Double-quoted string literal with escapes.
std::string quote(std::string_view text);

/// Span-insensitive S-expression of a tree, for structural comparison.
std::string dump(const Program& program);
std::string dump(const Stmt& stmt);
std::string dump(const Expr& expr);

}  // namespace robojs::lang
