// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace robojs::lang {

/// A region of a source file. Lines and columns are 1-based; the end
/// position is exclusive (one past the last character).
struct SourceSpan {
  std::string file_id;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool operator==(const SourceSpan&) const = default;

  bool same_position(const SourceSpan& other) const {
    return start_line == other.start_line && start_col == other.start_col &&
           end_line == other.end_line && end_col == other.end_col;
  }

  /// True when `inner` lies within this span (file ids are not compared).
  bool contains(const SourceSpan& inner) const;

  /// The span from the start of `first` to the end of `last`.
  static SourceSpan cover(const SourceSpan& first, const SourceSpan& last);
};

/// Compact position form "L:C-L:C", used inside instrumented code.
std::string to_position_string(const SourceSpan& span);
std::optional<SourceSpan> parse_position_string(std::string_view text,
                                                std::string file_id = {});

}  // namespace robojs::lang
