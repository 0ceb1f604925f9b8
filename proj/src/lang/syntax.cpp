// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/syntax.hpp"

namespace robojs::lang {

ParseResult parse_source(std::string_view source, std::string file_id) {
  auto lexed = tokenize(source, file_id);
  if (!lexed.ok()) {
    ParseResult result;
    result.diagnostics.push_back(*lexed.error);
    return result;
  }
  return parse(lexed.tokens, source, std::move(file_id));
}

Diagnostics check_syntax(std::string_view source, std::string file_id) {
  return parse_source(source, std::move(file_id)).diagnostics;
}

}  // namespace robojs::lang
