// SPDX-License-Identifier: Apache-2.0
#include "robojs/corpus/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "robojs/check/static_check.hpp"
#include "robojs/lang/syntax.hpp"

namespace robojs::corpus {

namespace fs = std::filesystem;

namespace {

constexpr const char* kNone = "-";

std::optional<int> revision_number(const fs::path& p) {
  std::string name = p.filename().string();
  if (name.size() < 4 || name.substr(name.size() - 3) != ".js") return std::nullopt;
  std::string digits = name.substr(0, name.size() - 3);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    return std::nullopt;
  }
  return std::stoi(digits);
}

std::vector<fs::directory_entry> sorted_entries(const fs::path& dir,
                                               std::vector<std::string>& warnings) {
  std::vector<fs::directory_entry> out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) out.push_back(e);
  if (ec) warnings.push_back(dir.string() + ": " + ec.message());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.path().filename() < b.path().filename(); });
  return out;
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

std::string grouped(std::uint64_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

// Display width in code points.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows) {
    w.resize(std::max(w.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string pad(w[i] - width(r[i]), ' ');
      if (i) line += "  ";
      line += i == 0 ? r[i] + pad : pad + r[i];  // names left, numbers right
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

Corpus load_corpus(const fs::path& root) {
  if (!fs::is_directory(root)) throw std::runtime_error(root.string() + " is not a directory");
  Corpus c;
  for (const auto& a : sorted_entries(root, c.warnings)) {
    if (!a.is_directory()) {
      c.warnings.push_back(a.path().string() + ": not an account directory, skipped");
      continue;
    }
    Account account{a.path().filename().string(), {}};
    for (const auto& f : sorted_entries(a.path(), c.warnings)) {
      if (!f.is_directory()) {
        c.warnings.push_back(f.path().string() + ": not a file directory, skipped");
        continue;
      }
      CorpusFile file{f.path().filename().string(), {}};
      for (const auto& r : sorted_entries(f.path(), c.warnings)) {
        auto n = revision_number(r.path());
        if (!n || !r.is_regular_file()) {
          c.warnings.push_back(r.path().string() + ": not a revision, skipped");
          continue;
        }
        auto text = read_file(r.path());
        if (!text) {
          c.warnings.push_back(r.path().string() + ": unreadable, skipped");
          continue;
        }
        std::error_code ec;
        file.revisions.push_back({*n, r.path(), std::move(*text), r.last_write_time(ec)});
      }
      std::sort(file.revisions.begin(), file.revisions.end(),
                [](const Revision& x, const Revision& y) { return x.number < y.number; });
      if (!file.revisions.empty()) account.files.push_back(std::move(file));
    }
    c.accounts.push_back(std::move(account));
  }
  return c;
}

std::uint64_t count_lines(const std::string& text) {
  std::uint64_t n = std::count(text.begin(), text.end(), '\n');
  if (!text.empty() && text.back() != '\n') ++n;
  return n;
}

std::optional<double> SizeRow::lines_per_revision() const {
  if (!revisions) return std::nullopt;
  return static_cast<double>(lines) / static_cast<double>(revisions);
}

std::optional<double> SizeRow::revisions_per_file() const {
  if (!files) return std::nullopt;
  return static_cast<double>(revisions) / static_cast<double>(files);
}

CorpusStats scan(const Corpus& corpus) {
  CorpusStats stats;
  for (const auto& a : corpus.accounts) {
    SizeRow row{a.name};
    for (const auto& f : a.files) {
      ++row.files;
      for (const auto& r : f.revisions) {
        ++row.revisions;
        row.lines += count_lines(r.source);
      }
    }
    stats.totals.lines += row.lines;
    stats.totals.revisions += row.revisions;
    stats.totals.files += row.files;
    stats.accounts.push_back(row);
  }
  return stats;
}

Findings analyze_revision(const std::string& source, const check::ArityTable& arities) {
  Findings out;
  auto parsed = lang::parse_source(source);
  if (!parsed.ok()) {
    out.syntax_error = true;
    return out;
  }
  for (const auto& d : check::static_check(*parsed.program, arities)) {
    if (check::is_check_category(d.category)) out.categories.insert(d.category);
  }
  for (const auto& d : check::pattern_check(*parsed.program)) {
    if (check::is_check_category(d.category)) out.categories.insert(d.category);
  }
  return out;
}

ErrorEstimate estimate_errors(const Corpus& corpus, const api::ApiManifest& manifest) {
  const check::ArityTable arities = check::ArityTable::from_manifest(manifest);

  std::vector<const Revision*> all;
  for (const auto& a : corpus.accounts) {
    for (const auto& f : a.files) {
      for (const auto& r : f.revisions) all.push_back(&r);
    }
  }
  std::vector<Findings> findings(all.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < all.size();) {
      findings[i] = analyze_revision(all[i]->source, arities);
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  {
    std::vector<std::jthread> workers;
    for (unsigned i = 1; i < n; ++i) workers.emplace_back(work);
    work();
  }

  // reduce in corpus order
  ErrorEstimate est;
  std::size_t k = 0;
  for (const auto& a : corpus.accounts) {
    ErrorRow row{a.name, 0, 0, 0, {}};
    for (const auto& f : a.files) {
      for (std::size_t j = 0; j < f.revisions.size(); ++j, ++k) {
        const Findings& r = findings[k];
        ++row.revisions;
        if (r.syntax_error) {
          ++row.syntax_errors;
          continue;
        }
        if (!r.categories.empty()) ++row.robojs_errors;
        for (auto c : r.categories) ++row.categories[c];
      }
    }
    est.totals.syntax_errors += row.syntax_errors;
    est.totals.robojs_errors += row.robojs_errors;
    est.totals.revisions += row.revisions;
    for (auto [c, count] : row.categories) est.totals.categories[c] += count;
    est.accounts.push_back(std::move(row));
  }
  return est;
}

std::string percent(std::uint64_t part, std::uint64_t whole) {
  if (!whole) return kNone;
  return fixed1(100.0 * static_cast<double>(part) / static_cast<double>(whole)) + "%";
}

std::string ratio(std::optional<double> value) { return value ? fixed1(*value) : kNone; }

std::string report(const CorpusStats& stats, const ErrorEstimate& errors, ReportFormat format) {
  auto error_row = [&](const std::string& account) -> const ErrorRow* {
    if (account == stats.totals.account) return &errors.totals;
    for (const auto& e : errors.accounts) {
      if (e.account == account) return &e;
    }
    return nullptr;
  };
  std::vector<SizeRow> rows = stats.accounts;
  rows.push_back(stats.totals);

  if (format == ReportFormat::Csv) {
    std::string out = "account,lines,revisions,files,lines_per_revision,revisions_per_file,"
                      "syntax_errors,robojs_errors,syntax_percent,robojs_percent";
    for (auto c : check::kCheckCategories) out += "," + std::string(lang::to_string(c));
    out += '\n';
    for (const auto& s : rows) {
      ErrorRow empty{s.account, 0, 0, 0, {}};
      const ErrorRow& e = error_row(s.account) ? *error_row(s.account) : empty;
      auto opt = [](std::optional<double> v) { return v ? fixed1(*v) : std::string(); };
      auto pct = [](std::uint64_t p, std::uint64_t w) {
        return w ? fixed1(100.0 * static_cast<double>(p) / static_cast<double>(w))
                 : std::string();
      };
      out += csv_field(s.account) + "," + std::to_string(s.lines) + "," +
             std::to_string(s.revisions) + "," + std::to_string(s.files) + "," +
             opt(s.lines_per_revision()) + "," + opt(s.revisions_per_file()) + "," +
             std::to_string(e.syntax_errors) + "," + std::to_string(e.robojs_errors) + "," +
             pct(e.syntax_errors, e.revisions) + "," + pct(e.robojs_errors, e.revisions);
      for (auto c : check::kCheckCategories) {
        auto it = e.categories.find(c);
        out += "," + std::to_string(it == e.categories.end() ? 0 : it->second);
      }
      out += '\n';
    }
    return out;
  }

  std::vector<std::vector<std::string>> size{{"Account", "L", "R", "F", "L/R", "R/F"}};
  for (const auto& s : rows) {
    size.push_back({s.account, grouped(s.lines), grouped(s.revisions), grouped(s.files),
                    ratio(s.lines_per_revision()), ratio(s.revisions_per_file())});
  }
  std::vector<std::vector<std::string>> err{{"Account", "Syntax", "RoboJS", "Revisions"}};
  for (const auto& s : rows) {
    const ErrorRow* e = error_row(s.account);
    err.push_back({s.account, grouped(e ? e->syntax_errors : 0),
                   grouped(e ? e->robojs_errors : 0), grouped(e ? e->revisions : 0)});
  }
  std::vector<std::vector<std::string>> cats{{"Category", "Revisions"}};
  for (auto c : check::kCheckCategories) {
    auto it = errors.totals.categories.find(c);
    cats.push_back({std::string(lang::to_string(c)),
                    grouped(it == errors.totals.categories.end() ? 0 : it->second)});
  }

  const ErrorRow& t = errors.totals;
  std::string out = table(size) + "\n" + table(err) + "\n" + table(cats) + "\n";
  out += "Syntax errors: " + percent(t.syntax_errors, t.revisions) + " of revisions (" +
         grouped(t.syntax_errors) + " of " + grouped(t.revisions) + ")\n";
  out += "RoboJS errors: " + percent(t.robojs_errors, t.revisions) + " of revisions (" +
         grouped(t.robojs_errors) + " of " + grouped(t.revisions) + ", estimated)\n";
  return out;
}

}  // namespace robojs::corpus
