// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "robojs/check/instrument.hpp"
#include "robojs/check/static_check.hpp"
#include "robojs/lang/syntax.hpp"
#include "program_gen.hpp"
#include "run_helpers.hpp"

using namespace robojs;
using lang::Category;
using testing::parse_ok;

namespace {

std::vector<Category> categories(const lang::Diagnostics& ds) {
  std::vector<Category> out;
  for (const auto& d : ds) out.push_back(d.category);
  return out;
}

std::vector<Category> static_categories(const std::string& src) {
  return categories(check::static_check(*parse_ok(src)));
}

std::vector<Category> pattern_categories(const std::string& src) {
  return categories(check::pattern_check(*parse_ok(src)));
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("static_check flags wrong builtin arity") {
  auto ds = check::static_check(*parse_ok("robot.moveTo(100, 100);\n"));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].category == Category::ArityMismatch);
  CHECK(ds[0].phase == lang::Phase::Static);
  CHECK(contains(ds[0].message, "robot.moveTo"));
  CHECK(ds[0].span.start_col == 1);

  CHECK(static_categories("robot.moveTo(1, 2, 90);").empty());
}

TEST_CASE("static_check rejects loose comparison everywhere") {
  CHECK(static_categories("if (true == 1) {}") ==
        std::vector{Category::LooseComparison});
  CHECK(static_categories("let a = 1; let b = a != 2;") ==
        std::vector{Category::LooseComparison});
  CHECK(static_categories("let a = 1 === 1;").empty());
}

TEST_CASE("static_check leaves conditions to the runtime") {
  CHECK(static_categories("let x = 1; if (x = 2) {}").empty());
  CHECK(static_categories("let x = 1; while (x) { x = x - 1; }").empty());
}

TEST_CASE("static_check user arity") {
  const char* src =
      "function f(a, b) { return a + b; }\n"
      "f(1);\n"
      "f(1, 2);\n"
      "f(1, 2, 3);\n";
  auto ds = check::static_check(*parse_ok(src));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].span.start_line == 2);
  CHECK(ds[0].message == "f expects 2 arguments but was called with 1.");
  CHECK(ds[1].span.start_line == 4);

  // reassigned functions are not tracked
  CHECK(static_categories("function f(a) { return a; }\n"
                          "function g() { return 1; }\n"
                          "f = g; f(1);")
            .empty());
}

TEST_CASE("static_check operand types") {
  CHECK(static_categories("let z = 'x' * 2;") == std::vector{Category::OpTypeMismatch});
  CHECK(static_categories("let z = 'x' + 2;") == std::vector{Category::OpTypeMismatch});
  CHECK(static_categories("let z = 'x' + 'y';").empty());
  CHECK(static_categories("let z = 'a' < 3;") == std::vector{Category::OpTypeMismatch});
  CHECK(static_categories("let z = -'a';") == std::vector{Category::OpTypeMismatch});
  CHECK(static_categories("console.log(robot.getBallPosX > 0);") ==
        std::vector{Category::FunctionComparedAsValue});
  CHECK(static_categories("console.log(robot.getBallPosX() > 0);").empty());
  CHECK(static_categories("robot.flyTo(1);") == std::vector{Category::MissingMember});
  // unknown types stay quiet
  CHECK(static_categories("function f(a) { return a * 2; }").empty());
}

TEST_CASE("pattern_check conditions and uninitialized reads") {
  CHECK(pattern_categories("let x = 1; if (x = 2) {}") ==
        std::vector{Category::ConditionalAssignment});
  CHECK(pattern_categories("let x = 3; while (x) { x = x - 1; }") ==
        std::vector{Category::NonBooleanCondition});
  CHECK(pattern_categories("let x = 3; if (x > 1) {}").empty());
  CHECK(pattern_categories("let x; console.log(x);") ==
        std::vector{Category::UninitializedVariable});
  CHECK(pattern_categories("let x; x = 1; console.log(x);").empty());
  CHECK(pattern_categories("let x;\nif (true) { x = 1; }\nconsole.log(x);").empty());
  CHECK(pattern_categories("let x;\nif (true) { console.log(x); }") ==
        std::vector{Category::UninitializedVariable});
  CHECK(pattern_categories("let x;\nfunction f() { x = 1; }\nf();\nconsole.log(x);")
            .empty());
}

TEST_CASE("instrument routes comparisons through check functions") {
  auto program = parse_ok("let x = 1;\nlet y = 2;\nconsole.log(x > y);\n");
  std::string out = check::instrument(*program);
  CHECK(contains(out, "checkedGT(x, y, \"3:13-3:18\")"));
  CHECK(contains(out, "\"use robojs\";"));

  auto mul = check::instrument(*parse_ok("let z = 'x' * 2;"));
  CHECK(contains(mul, "checkedMul(\"x\", 2, "));
}

TEST_CASE("instrument leaves console.log alone apart from the prelude") {
  auto out = check::instrument(*parse_ok("console.log(\"hi\");\n"));
  CHECK(out == "\"use robojs\";\nconsole.log(\"hi\");\n");
}

TEST_CASE("instrument output re-parses and is never applied twice") {
  const char* src =
      "let n;\n"
      "function fact(k) { if (k <= 1) { return 1; } return k * fact(k - 1); }\n"
      "n = fact(5);\n"
      "for (let i = 0; i < 3; i += 1) { n -= i; }\n"
      "while (n > 100) { n = n / 2; }\n"
      "console.log(n, -n, !true);\n";
  auto once = testing::instrumented(src);
  CHECK(check::is_instrumented(*once));
  CHECK_THROWS_AS(check::instrument(*once), check::AlreadyInstrumented);
  CHECK(lang::check_syntax(check::instrument(*parse_ok(src))).empty());
}

TEST_CASE("function arity prologue") {
  auto program = parse_ok("function f(a, b) { return a; }");
  const auto& fn = *program->body[0]->as<lang::FunctionDecl>();
  auto stmt = check::function_arity_prologue(fn);
  CHECK(lang::print(*stmt, 0) == "checkedArity(\"f\", 2);");

  auto short_call = testing::run_instrumented("function f(a, b) { return a; }\nf(1);\n");
  REQUIRE(short_call.diagnostic);
  CHECK(short_call.diagnostic->category == Category::ArityMismatch);
  CHECK(short_call.diagnostic->message == "f expects 2 arguments but was called with 1.");
  CHECK(short_call.diagnostic->span.start_line == 2);

  auto ok = testing::run_instrumented("function f(a, b) { return a; }\nf(1, 2);\n");
  CHECK(ok.status == exec::ExecStatus::Completed);

  auto long_call =
      testing::run_instrumented("function f(a, b) { return a; }\nf(1, 2, 3);\n");
  REQUIRE(long_call.diagnostic);
  CHECK(long_call.diagnostic->message == "f expects 2 arguments but was called with 3.");
}

TEST_CASE("instrumented errors report student spans") {
  auto o = testing::run_instrumented("let x = 1;\nlet y = 'a';\nconsole.log(x > y);\n");
  REQUIRE(o.diagnostic);
  CHECK(o.diagnostic->category == Category::OpTypeMismatch);
  CHECK(o.diagnostic->message == "Arguments of \">\" must both be numbers.");
  CHECK(o.diagnostic->span.file_id == "t.js");
  CHECK(o.diagnostic->span.start_line == 3);
  CHECK(o.diagnostic->span.start_col == 13);
  CHECK(o.diagnostic->span.end_col == 18);
}

TEST_CASE("transparency on check-free programs") {
  const char* programs[] = {
      "let s = 0; for (let i = 0; i < 10; i += 1) { s += i * i; } console.log(s);",
      "function g(a) { return a + '!'; } console.log(g('hi'), 1 / 3, 0.1 + 0.2);",
      "let t = true; if (t && !false) { console.log('yes'); } else { console.log('no'); }",
  };
  for (const char* p : programs) {
    CAPTURE(p);
    auto plain = testing::run_mode(p, exec::Mode::Permissive);
    auto inst = testing::run_instrumented(p);
    CHECK(plain.status == exec::ExecStatus::Completed);
    CHECK(plain.printed_output == inst.printed_output);
  }
}

TEST_CASE("strict run and instrumented run agree on generated programs") {
  int mismatches = 0;
  int aborted = 0;
  for (std::uint32_t seed = 1; seed <= 300; ++seed) {
    std::string src = testing::ProgramGenerator(seed).program();
    auto a = testing::run_mode(src, exec::Mode::Strict, 20'000, true);
    auto b = testing::run_instrumented(src, 20'000, true);
    if (a.status == exec::ExecStatus::Aborted) ++aborted;
    if (!testing::same_outcome(a, b)) {
      ++mismatches;
      if (mismatches <= 3) {
        MESSAGE(src << "\nstrict: " << testing::describe(a)
                    << "\ninstrumented: " << testing::describe(b));
      }
    }
  }
  CHECK(mismatches == 0);
  CHECK(aborted > 50);
}
