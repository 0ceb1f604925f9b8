// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "robojs/api/manifest.hpp"
#include "robojs/check/arity_table.hpp"
#include "robojs/lang/diagnostic.hpp"

namespace robojs::corpus {

struct Revision {
  int number = 0;
  std::filesystem::path path;
  std::string source;
  std::filesystem::file_time_type saved{};
};

struct CorpusFile {
  std::string name;
  std::vector<Revision> revisions;  // ascending by number
};

struct Account {
  std::string name;
  std::vector<CorpusFile> files;
};

/// Saved revisions laid out as `root/account/file/NNN.js`.
struct Corpus {
  std::vector<Account> accounts;       // sorted by name
  std::vector<std::string> warnings;   // unreadable or misplaced entries
};

/// Throws std::runtime_error when `root` is not a directory. Entries that
/// do not fit the layout, and files that cannot be read, become warnings.
Corpus load_corpus(const std::filesystem::path& root);

/// Physical lines: newline characters, plus one for a final unterminated
/// line.
std::uint64_t count_lines(const std::string& text);

struct SizeRow {
  std::string account;
  std::uint64_t lines = 0;
  std::uint64_t revisions = 0;
  std::uint64_t files = 0;

  std::optional<double> lines_per_revision() const;
  std::optional<double> revisions_per_file() const;
};

struct CorpusStats {
  std::vector<SizeRow> accounts;
  SizeRow totals{"Total"};
};

CorpusStats scan(const Corpus& corpus);

/// What the analyzer finds in one revision.
struct Findings {
  bool syntax_error = false;
  std::set<lang::Category> categories;  // empty when syntax_error
};

Findings analyze_revision(const std::string& source, const check::ArityTable& arities);

struct ErrorRow {
  std::string account;
  std::uint64_t syntax_errors = 0;  // revisions that do not parse
  std::uint64_t robojs_errors = 0;  // parsing revisions with at least one category
  std::uint64_t revisions = 0;
  std::map<lang::Category, std::uint64_t> categories;  // revisions per category
};

struct ErrorEstimate {
  std::vector<ErrorRow> accounts;
  ErrorRow totals{"Total", 0, 0, 0, {}};
};

ErrorEstimate estimate_errors(const Corpus& corpus,
                              const api::ApiManifest& manifest = api::api_catalog());

enum class ReportFormat { Table, Csv };

std::string report(const CorpusStats& stats, const ErrorEstimate& errors, ReportFormat format);

/// "10.0%", or "-" for an empty denominator.
std::string percent(std::uint64_t part, std::uint64_t whole);
/// One decimal, or "-".
std::string ratio(std::optional<double> value);

}  // namespace robojs::corpus
