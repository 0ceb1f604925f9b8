// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "robojs/lang/parser.hpp"

namespace robojs::lang {

/// Tokenizes and parses `source`. Lexical errors stop the pipeline; parse
/// errors are collected with recovery.
ParseResult parse_source(std::string_view source, std::string file_id = {});

/// Syntax diagnostics only; empty when the program is well formed.
Diagnostics check_syntax(std::string_view source, std::string file_id = {});

}  // namespace robojs::lang
