// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/source_span.hpp"

#include <charconv>
#include <tuple>

namespace robojs::lang {

bool SourceSpan::contains(const SourceSpan& inner) const {
  auto starts_before = std::tie(start_line, start_col) <=
                       std::tie(inner.start_line, inner.start_col);
  auto ends_after =
      std::tie(inner.end_line, inner.end_col) <= std::tie(end_line, end_col);
  return starts_before && ends_after;
}

SourceSpan SourceSpan::cover(const SourceSpan& first, const SourceSpan& last) {
  return SourceSpan{first.file_id, first.start_line, first.start_col,
                    last.end_line, last.end_col};
}

std::string to_position_string(const SourceSpan& span) {
  return std::to_string(span.start_line) + ":" +
         std::to_string(span.start_col) + "-" + std::to_string(span.end_line) +
         ":" + std::to_string(span.end_col);
}

namespace {

bool read_int(std::string_view& text, int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || out < 1) return false;
  text.remove_prefix(static_cast<size_t>(ptr - text.data()));
  return true;
}

bool expect(std::string_view& text, char c) {
  if (text.empty() || text.front() != c) return false;
  text.remove_prefix(1);
  return true;
}

}  // namespace

std::optional<SourceSpan> parse_position_string(std::string_view text,
                                                std::string file_id) {
  SourceSpan span;
  span.file_id = std::move(file_id);
  if (!read_int(text, span.start_line) || !expect(text, ':') ||
      !read_int(text, span.start_col) || !expect(text, '-') ||
      !read_int(text, span.end_line) || !expect(text, ':') ||
      !read_int(text, span.end_col) || !text.empty()) {
    return std::nullopt;
  }
  return span;
}

}  // namespace robojs::lang
