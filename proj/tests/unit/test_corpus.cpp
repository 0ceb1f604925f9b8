// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "robojs/api/robot_api.hpp"
#include "robojs/check/static_check.hpp"
#include "robojs/corpus/corpus.hpp"
#include "robojs/host/ports.hpp"
#include "robojs/sim/scenario.hpp"
#include "run_helpers.hpp"

using namespace robojs;
using namespace robojs::corpus;
using lang::Category;
namespace fs = std::filesystem;

namespace {

const fs::path kFixture = fs::path(ROBOJS_SOURCE_DIR) / "tests/fixtures/corpus";

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("robojs-corpus-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  void write(const std::string& account, const std::string& file, int rev,
             const std::string& text) const {
    fs::path dir = path / account / file;
    fs::create_directories(dir);
    char name[16];
    std::snprintf(name, sizeof name, "%03d.js", rev);
    std::ofstream(dir / name, std::ios::binary) << text;
  }
};

std::string ten_lines() {
  std::string s;
  for (int i = 0; i < 10; ++i) s += "console.log(" + std::to_string(i) + ");\n";
  return s;
}

std::set<Category> flags(const std::string& source) {
  return analyze_revision(source, check::ArityTable::standard()).categories;
}

/// Strict run against a robot that completes every motion at once.
exec::ExecOutcome run_strict(const std::string& source) {
  std::ostringstream log;
  auto scenario = sim::resolve(sim::load_scenario("maze"));
  host::StubPort port(log, sim::initial_world(scenario));
  api::RobotSession session;
  exec::ExecOptions options;
  options.budget = 100'000;
  exec::Interpreter interp(options);
  api::install_robot_api(interp, port, session, api::api_config_for(scenario));
  return interp.run(testing::parse_ok(source));
}

}  // namespace

TEST_CASE("bundled corpus matches its planted ground truth") {
  std::ifstream in(fs::path(ROBOJS_SOURCE_DIR) / "tests/fixtures/corpus_expected.json");
  auto expected = nlohmann::json::parse(in);
  Corpus corpus = load_corpus(kFixture);
  CorpusStats stats = scan(corpus);
  ErrorEstimate errors = estimate_errors(corpus);

  REQUIRE(stats.accounts.size() == expected["accounts"].size());
  for (std::size_t i = 0; i < stats.accounts.size(); ++i) {
    const auto& s = stats.accounts[i];
    const auto& e = errors.accounts[i];
    CAPTURE(s.account);
    const auto& want = expected["accounts"][s.account];
    CHECK(s.lines == want["lines"]);
    CHECK(s.revisions == want["revisions"]);
    CHECK(s.files == want["files"]);
    CHECK(e.account == s.account);
    CHECK(e.syntax_errors == want["syntax"]);
    CHECK(e.robojs_errors == want["robojs"]);
    CHECK(e.revisions == want["revisions"]);
  }
  const auto& t = expected["totals"];
  CHECK(stats.totals.lines == t["lines"]);
  CHECK(stats.totals.revisions == t["revisions"]);
  CHECK(stats.totals.files == t["files"]);
  CHECK(errors.totals.syntax_errors == t["syntax"]);
  CHECK(errors.totals.robojs_errors == t["robojs"]);
  for (auto c : check::kCheckCategories) {
    CAPTURE(lang::to_string(c));
    auto it = errors.totals.categories.find(c);
    std::uint64_t got = it == errors.totals.categories.end() ? 0 : it->second;
    CHECK(got == expected["categories"][std::string(lang::to_string(c))]);
  }
  CHECK(ratio(stats.totals.lines_per_revision()) == expected["lines_per_revision"]);
  CHECK(ratio(stats.totals.revisions_per_file()) == expected["revisions_per_file"]);

  std::string text = report(stats, errors, ReportFormat::Table);
  CHECK(text.find(expected["syntax_percent"].get<std::string>()) != std::string::npos);
  CHECK(text.find(expected["robojs_percent"].get<std::string>()) != std::string::npos);

  // the stray README is reported, not counted
  REQUIRE(corpus.warnings.size() == 1);
  CHECK(corpus.warnings[0].find("README.txt") != std::string::npos);
}

TEST_CASE("size statistics of a constructed corpus") {
  TempDir dir;
  for (int r = 1; r <= 3; ++r) dir.write("acct", "a.js", r, ten_lines());
  for (int r = 1; r <= 2; ++r) dir.write("acct", "b.js", r, ten_lines());
  CorpusStats stats = scan(load_corpus(dir.path));
  REQUIRE(stats.accounts.size() == 1);
  CHECK(stats.totals.lines == 50);
  CHECK(stats.totals.revisions == 5);
  CHECK(stats.totals.files == 2);
  CHECK(ratio(stats.totals.lines_per_revision()) == "10.0");
  CHECK(ratio(stats.totals.revisions_per_file()) == "2.5");
}

TEST_CASE("totals are sums and ratios come from the totals") {
  TempDir dir;
  dir.write("a", "x.js", 1, "1;\n");
  dir.write("b", "y.js", 1, "1;\n2;\n3;\n");
  dir.write("b", "y.js", 2, "1;\n2;\n3;\n4;\n5;\n6;\n7;\n");
  CorpusStats stats = scan(load_corpus(dir.path));
  CHECK(stats.totals.lines == 11);
  // 11 / 3, not the mean of 1.0 and 5.0
  CHECK(ratio(stats.totals.lines_per_revision()) == "3.7");
}

TEST_CASE("empty corpus gives zeros and no ratios") {
  TempDir dir;
  Corpus corpus = load_corpus(dir.path);
  CorpusStats stats = scan(corpus);
  ErrorEstimate errors = estimate_errors(corpus);
  CHECK(stats.totals.lines == 0);
  CHECK(stats.totals.revisions == 0);
  CHECK(ratio(stats.totals.lines_per_revision()) == "-");
  CHECK(percent(0, 0) == "-");
  std::string text = report(stats, errors, ReportFormat::Table);
  CHECK(text.find("Total    0  0  0    -    -\n") != std::string::npos);
  CHECK_THROWS(load_corpus(dir.path / "missing"));
}

TEST_CASE("line counting") {
  CHECK(count_lines("") == 0);
  CHECK(count_lines("a") == 1);
  CHECK(count_lines("a\n") == 1);
  CHECK(count_lines("a\nb") == 2);
  CHECK(count_lines("\n\n") == 2);
}

TEST_CASE("rule examples") {
  CHECK(flags("robot.setRobotId(0);\nrobot.moveTo(100, 100);\n") ==
        std::set<Category>{Category::ArityMismatch});
  CHECK(flags("let s = 'a' + 'b';\n").empty());
  CHECK(flags("let x;\nx = 3;\nconsole.log(x);\n").empty());
  CHECK(flags("let x;\nif (true) {\n  x = 1;\n}\nconsole.log(x);\n").empty());
  CHECK(flags("let a = 1;\nif (a === 1) {\n}\n").empty());
  CHECK(flags("let n = 0;\nwhile (n < 3) {\n  n = n + 1;\n}\n").empty());
  CHECK(analyze_revision("let x = ;\n", check::ArityTable::standard()).syntax_error);
}

TEST_CASE("one revision per category counts one in each row") {
  const std::vector<std::pair<Category, std::string>> planted = {
      {Category::LooseComparison, "let x = 1;\nif (x == 1) {\n}\n"},
      {Category::UninitializedVariable, "let v;\nconsole.log(v);\n"},
      {Category::ConditionalAssignment, "let m = 0;\nif (m = 2) {\n}\n"},
      {Category::OpTypeMismatch, "let q = \"a\" - 1;\n"},
      {Category::ArityMismatch, "robot.setRobotId(0);\nrobot.kick();\n"},
      {Category::MissingMember, "robot.fly();\n"},
      {Category::NonBooleanCondition, "let k = \"go\";\nif (k) {\n}\n"},
      {Category::FunctionComparedAsValue, "function f() {\n  return 2;\n}\nlet b = f < 3;\n"},
  };
  TempDir dir;
  int rev = 1;
  for (const auto& [category, source] : planted) dir.write("team", "p.js", rev++, source);
  dir.write("team", "p.js", rev++, "console.log('clean');\n");
  ErrorEstimate errors = estimate_errors(load_corpus(dir.path));
  CHECK(errors.totals.revisions == 9);
  CHECK(errors.totals.robojs_errors == 8);
  for (auto c : check::kCheckCategories) {
    CAPTURE(lang::to_string(c));
    CHECK(errors.totals.categories[c] == 1);
  }
}

TEST_CASE("a revision with two categories counts once in the error column") {
  TempDir dir;
  dir.write("t", "f.js", 1, "robot.setRobotId(0);\nif (robot.getAngle() != 90) {\n  robot.turnTo();\n}\n");
  ErrorEstimate errors = estimate_errors(load_corpus(dir.path));
  CHECK(errors.totals.robojs_errors == 1);
  CHECK(errors.totals.categories[Category::LooseComparison] == 1);
  CHECK(errors.totals.categories[Category::ArityMismatch] == 1);
}

TEST_CASE("syntax errors are excluded from the estimate") {
  TempDir dir;
  dir.write("t", "f.js", 1, "if (x == 1) {\n");
  ErrorEstimate errors = estimate_errors(load_corpus(dir.path));
  CHECK(errors.totals.syntax_errors == 1);
  CHECK(errors.totals.robojs_errors == 0);
  CHECK(errors.totals.categories.empty());
}

TEST_CASE("headline percentages") {
  TempDir dir;
  for (int r = 1; r <= 7; ++r) dir.write("t", "f.js", r, "console.log(" + std::to_string(r) + ");\n");
  dir.write("t", "f.js", 8, "let x = 1\n");
  dir.write("t", "f.js", 9, "let a = 1;\nif (a == 2) {\n}\n");
  dir.write("t", "f.js", 10, "robot.setRobotId(0);\nrobot.moveTo(1, 1);\n");
  Corpus corpus = load_corpus(dir.path);
  std::string text = report(scan(corpus), estimate_errors(corpus), ReportFormat::Table);
  CHECK(text.find("Syntax errors: 10.0% of revisions (1 of 10)") != std::string::npos);
  CHECK(text.find("RoboJS errors: 20.0% of revisions (2 of 10, estimated)") != std::string::npos);
}

TEST_CASE("csv has a header and one row per account plus totals") {
  Corpus corpus = load_corpus(kFixture);
  std::string csv = report(scan(corpus), estimate_errors(corpus), ReportFormat::Csv);
  std::istringstream in(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 1 + corpus.accounts.size() + 1);
  CHECK(lines[0].rfind("account,lines,revisions,files,lines_per_revision,revisions_per_file,"
                       "syntax_errors,robojs_errors,syntax_percent,robojs_percent,",
                       0) == 0);
  CHECK(lines[1].rfind("team-a,34,7,2,", 0) == 0);
  CHECK(lines.back().rfind("Total,75,20,6,3.8,3.3,3,9,15.0,45.0,", 0) == 0);
}

TEST_CASE("thousands separators in the table") {
  ErrorEstimate errors;
  CorpusStats stats;
  stats.totals.lines = 106168;
  stats.totals.revisions = 3230;
  stats.totals.files = 237;
  std::string text = report(stats, errors, ReportFormat::Table);
  CHECK(text.find("106,168") != std::string::npos);
  CHECK(text.find("3,230") != std::string::npos);
}

TEST_CASE("estimates are deterministic") {
  Corpus corpus = load_corpus(kFixture);
  std::string a = report(scan(corpus), estimate_errors(corpus), ReportFormat::Csv);
  std::string b = report(scan(corpus), estimate_errors(corpus), ReportFormat::Csv);
  CHECK(a == b);
}

TEST_CASE("manifest arities drive the arity rule") {
  api::ApiManifest manifest = api::api_catalog();
  for (auto& e : manifest.entries) {
    if (e.name == "moveTo") {
      e.arity = 2;
      e.params.resize(2);
    }
  }
  TempDir dir;
  dir.write("t", "f.js", 1, "robot.setRobotId(0);\nrobot.moveTo(1, 1);\n");
  Corpus corpus = load_corpus(dir.path);
  CHECK(estimate_errors(corpus).totals.robojs_errors == 1);
  CHECK(estimate_errors(corpus, manifest).totals.robojs_errors == 0);
}

TEST_CASE("flagged fixture revisions abort in strict mode with a flagged category") {
  Corpus corpus = load_corpus(kFixture);
  int flagged = 0;
  int clean = 0;
  for (const auto& a : corpus.accounts) {
    for (const auto& f : a.files) {
      for (const auto& r : f.revisions) {
        CAPTURE(r.path.string());
        Findings found = analyze_revision(r.source, check::ArityTable::standard());
        if (found.syntax_error) continue;
        exec::ExecOutcome outcome = run_strict(r.source);
        if (found.categories.empty()) {
          ++clean;
          bool check_abort = outcome.diagnostic &&
                             check::is_check_category(outcome.diagnostic->category);
          CHECK_FALSE(check_abort);
          continue;
        }
        ++flagged;
        REQUIRE(outcome.status == exec::ExecStatus::Aborted);
        CHECK(found.categories.count(outcome.diagnostic->category) == 1);
      }
    }
  }
  CHECK(flagged == 9);
  CHECK(clean == 8);
}
