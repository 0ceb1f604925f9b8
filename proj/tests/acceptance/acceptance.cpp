// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "field_run.hpp"
#include "json.hpp"
#include "program_gen.hpp"
#include "robojs/corpus/corpus.hpp"
#include "robojs/net/client.hpp"
#include "robojs/net/server.hpp"
#include "robojs/net/transport.hpp"
#include "run_helpers.hpp"
#include "safety_fuzz.hpp"

using namespace robojs;
using exec::ExecStatus;
using exec::Mode;
using lang::Category;
using net::CommandMsg;
using net::CommandResult;
using net::Skill;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string joined(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

sim::ScenarioConfig centered() {
  sim::ScenarioConfig c;
  c.name = "center";
  c.robots = {{0, 0, 0, 0}};
  c.ball = {-1.0, -0.8};
  return c;
}

Result pitfall_table() {
  struct Row {
    const char* name;
    const char* source;
    std::vector<std::string> permissive;
    Category category;
  };
  const Row rows[] = {
      {"loose comparison",
       "let flag = true;\nif (flag == 1) {\n  console.log('equal');\n}\n",
       {"equal"},
       Category::LooseComparison},
      {"uninitialized variable",
       "let x;\nlet y = x;\nconsole.log(y);\n",
       {"undefined"},
       Category::UninitializedVariable},
      {"conditional assignment",
       "let x = 5;\nif (x = 'go') {\n  console.log('branch', x);\n}\n",
       {"branch go"},
       Category::ConditionalAssignment},
      {"op type mismatch",
       "let s = 'x';\nlet n = s * 2;\nconsole.log(n);\n",
       {"NaN"},
       Category::OpTypeMismatch},
      {"arity mismatch",
       "function setX(a, b) {\n  console.log(a, b);\n}\nsetX(1);\n",
       {"1 undefined"},
       Category::ArityMismatch},
  };
  int ok = 0;
  std::string failed;
  for (const auto& row : rows) {
    auto loose = testing::run_mode(row.source, Mode::Permissive);
    auto strict = testing::run_mode(row.source, Mode::Strict);
    bool good = loose.status == ExecStatus::Completed && loose.printed_output == row.permissive &&
                strict.status == ExecStatus::Aborted && strict.diagnostic &&
                strict.diagnostic->category == row.category;
    if (good) {
      ++ok;
    } else {
      failed += std::string(" [") + row.name + ": permissive " + testing::describe(loose) +
                "; strict " + testing::describe(strict) + "]";
    }
  }
  return {ok == 5, std::to_string(ok) + "/5" + failed};
}

Result equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  const int n = 1000;
  int mismatches = 0, aborted = 0;
  std::string first;
  for (std::uint32_t seed = 1; seed <= n; ++seed) {
    std::string src = testing::ProgramGenerator(seed).program();
    auto a = testing::run_mode(src, Mode::Strict, 20'000, true);
    auto b = testing::run_instrumented(src, 20'000, true);
    if (a.status == ExecStatus::Aborted) ++aborted;
    if (!testing::same_outcome(a, b)) {
      if (mismatches++ == 0) first = " first mismatch at seed " + std::to_string(seed);
    }
  }
  double took = seconds_since(t0);
  std::ostringstream d;
  d << n << " programs, " << aborted << " aborting, " << mismatches << " mismatches, " << took
    << " s" << first;
  return {mismatches == 0 && took < 300, d.str()};
}

Result permissive_oracle() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator("tests/fixtures/oracle/clean")) {
    if (e.path().extension() == ".js") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  int matched = 0;
  std::string failed;
  for (const auto& js : files) {
    auto expected = slurp(std::filesystem::path(js).replace_extension(".out"));
    auto o = testing::run_mode(slurp(js), Mode::Permissive, 10'000'000);
    if (o.status == ExecStatus::Completed && joined(o.printed_output) == expected) {
      ++matched;
    } else {
      failed += " " + js.filename().string();
    }
  }
  bool pass = files.size() == 50 && matched == 50;
  return {pass, std::to_string(matched) + "/" + std::to_string(files.size()) +
                    " byte-identical" + failed};
}

Result safety_fuzz() {
  auto t0 = std::chrono::steady_clock::now();
  fuzz::Stats total;
  for (std::uint32_t seed = 1; seed <= 50; ++seed) total.merge(fuzz::run(seed, 200, 4));
  double took = seconds_since(t0);
  std::ostringstream d;
  d << total.seconds << " simulated s, " << total.commands << " commands; violations: speed "
    << total.speed_violations << ", separation " << total.separation_violations
    << ", containment " << total.containment_violations << ", timeout "
    << total.timeout_violations << "; max speed " << total.max_speed << ", min separation "
    << total.min_separation << "; " << took << " s";
  return {total.clean() && total.seconds >= 10'000 - 1e-6 && took < 120, d.str()};
}

Result boundary_truncation() {
  host::Field field(centered());
  testing::FieldRun run(field);
  auto out = run.run(
      "robot.setRobotId(0);\nrobot.moveToXY(5.0, 5.0);\n"
      "console.log(robot.getPosX(), robot.getPosY());\n");
  if (out.status != ExecStatus::Completed || out.printed_output.size() != 1) {
    return {false, testing::describe(out)};
  }
  std::istringstream sensed(out.printed_output[0]);
  double x = 0, y = 0;
  sensed >> x >> y;
  double err = std::hypot(x - 1.71, y - 1.11);
  std::ostringstream d;
  d << "sensed (" << x << ", " << y << "), error " << err << " m";
  return {err <= 0.02, d.str()};
}

Result kick_applicability() {
  auto field_with_ball = [](double bx) {
    sim::ScenarioConfig sc;
    sc.name = "kick";
    sc.robots = {{0, 0, 0, 0}};
    sc.ball = {bx, 0};
    return sc;
  };
  host::Field far(field_with_ball(1.5));
  auto refused = far.command("a", {0, Skill::Kick, {1}, 1});

  host::Field near(field_with_ball(0.15));
  const double power = 0.5;
  auto accepted = near.command("a", {0, Skill::Kick, {power}, 1});
  near.tick();
  const auto& ball = near.world().ball;
  double speed = std::hypot(ball.vx, ball.vy);

  std::ostringstream d;
  d << "far: " << (refused.accepted ? "accepted" : "REJECT " + refused.reason)
    << "; near: " << (accepted.accepted ? "accepted" : "REJECT " + accepted.reason)
    << ", ball speed after one step " << speed << " m/s (expected " << power * 2.0 << ")";
  bool pass = !refused.accepted && accepted.accepted && std::abs(speed - power * 2.0) < 1e-9;
  return {pass, d.str()};
}

Result protocol_loss() {
  sim::ScenarioConfig sc;
  sc.name = "pair";
  sc.robots = {{0, -1, 0, 0}, {1, 1, 0, 180}};
  sc.ball = {0, 0.8};
  host::Field field(sc);
  net::UdpTransport command_socket(0, "127.0.0.1"), state_socket(0, "127.0.0.1");
  net::GuardServer server(field, command_socket, state_socket);
  server.start();

  net::UdpTransport socket(0, "127.0.0.1");
  net::LossyTransport lossy(socket, 0.2, 0.2, 42);
  net::CommandClient client(lossy, command_socket.local_endpoint(), "lossy");
  int acked = 0, attempts = 0;
  for (std::uint64_t i = 1; i <= 50; ++i) {
    auto r = client.request({0, Skill::TurnTo, {static_cast<double>(i)}, i});
    if (r.status == CommandResult::Status::Ack) ++acked;
    attempts += r.attempts;
  }
  auto applied = server.stats().commands;
  server.stop();

  net::UdpTransport dead(0, "127.0.0.1");
  net::UdpTransport lonely(0, "127.0.0.1");
  net::CommandClient orphan(lonely, dead.local_endpoint(), "a");
  auto t0 = std::chrono::steady_clock::now();
  auto r = orphan.request({0, Skill::Halt, {}, 1});
  double took = seconds_since(t0);

  std::ostringstream d;
  d << acked << "/50 acked, " << applied << " applied, " << lossy.dropped() << " dropped, "
    << attempts << " attempts; offline guard: "
    << (r.status == CommandResult::Status::Timeout ? "timeout" : "no timeout") << " after "
    << took << " s";
  bool pass = acked == 50 && applied == 50 && lossy.dropped() > 0 &&
              r.status == CommandResult::Status::Timeout && std::abs(took - 2.0) <= 0.2;
  return {pass, d.str()};
}

Result corpus_ground_truth() {
  auto expected = nlohmann::json::parse(slurp("tests/fixtures/corpus_expected.json"));
  auto c = corpus::load_corpus("tests/fixtures/corpus");
  auto stats = corpus::scan(c);
  auto errors = corpus::estimate_errors(c);
  int mismatches = 0;
  std::string failed;
  auto expect = [&](const std::string& what, std::uint64_t got, std::uint64_t want) {
    if (got != want) {
      ++mismatches;
      failed += " " + what + "=" + std::to_string(got) + "/" + std::to_string(want);
    }
  };
  const auto& accounts = expected["accounts"];
  expect("accounts", stats.accounts.size(), accounts.size());
  for (std::size_t i = 0; i < stats.accounts.size() && i < errors.accounts.size(); ++i) {
    const auto& s = stats.accounts[i];
    const auto& e = errors.accounts[i];
    if (!accounts.contains(s.account)) {
      ++mismatches;
      failed += " unexpected account " + s.account;
      continue;
    }
    const auto& want = accounts[s.account];
    expect(s.account + ".lines", s.lines, want["lines"]);
    expect(s.account + ".revisions", s.revisions, want["revisions"]);
    expect(s.account + ".files", s.files, want["files"]);
    expect(s.account + ".syntax", e.syntax_errors, want["syntax"]);
    expect(s.account + ".robojs", e.robojs_errors, want["robojs"]);
  }
  const auto& totals = expected["totals"];
  expect("lines", stats.totals.lines, totals["lines"]);
  expect("revisions", stats.totals.revisions, totals["revisions"]);
  expect("files", stats.totals.files, totals["files"]);
  expect("syntax", errors.totals.syntax_errors, totals["syntax"]);
  expect("robojs", errors.totals.robojs_errors, totals["robojs"]);
  expect("error revisions", errors.totals.revisions, totals["revisions"]);
  for (const auto& [name, count] : expected["categories"].items()) {
    std::uint64_t got = 0;
    for (const auto& [cat, n] : errors.totals.categories) {
      if (lang::to_string(cat) == name) got = n;
    }
    expect(name, got, count.get<std::uint64_t>());
  }

  std::string table = corpus::report(stats, errors, corpus::ReportFormat::Table);
  const char* columns[] = {" L ",    " R ",       " F ",          "L/R",
                           "R/F",    "Syntax",    "RoboJS",       "Revisions",
                           "Syntax errors: ", "RoboJS errors: "};
  std::string missing;
  for (const char* col : columns) {
    if (table.find(col) == std::string::npos) missing += std::string(" '") + col + "'";
  }
  std::ostringstream d;
  d << "L/R/F " << stats.totals.lines << "/" << stats.totals.revisions << "/"
    << stats.totals.files << ", syntax " << errors.totals.syntax_errors << ", robojs "
    << errors.totals.robojs_errors << "; " << mismatches << " mismatches" << failed;
  if (!missing.empty()) d << "; report lacks" << missing;
  return {mismatches == 0 && missing.empty(), d.str()};
}

Result straight_line() {
  host::Field field(centered());
  exec::ExecOptions opts;
  double printed_at = -1;
  opts.on_print = [&](const std::string&) { printed_at = field.now(); };
  testing::FieldRun run(field, opts);
  double moved_at = -1, turned_at = -1;
  field.add_listener([&](const sim::WorldState& w) {
    const auto& r = *w.robot(0);
    if (moved_at < 0 && std::hypot(r.x - 1.0, r.y - 1.0) <= 0.02) moved_at = w.timestamp;
    if (moved_at >= 0 && turned_at < 0 &&
        std::abs(api::normalize_degrees(r.theta - 180)) <= 3) {
      turned_at = w.timestamp;
    }
  });
  // 100 by 100 on the original canvas, scaled to metres.
  auto out = run.run(
      "robot.setRobotId(0);\nrobot.moveToXY(1.0, 1.0);\nrobot.turnTo(180);\n"
      "console.log('Done');\n");
  std::ostringstream d;
  d << "move done at " << moved_at << " s, turn done at " << turned_at << " s, 'Done' at "
    << printed_at << " s";
  bool pass = out.status == ExecStatus::Completed &&
              out.printed_output == std::vector<std::string>{"Done"} && moved_at > 0 &&
              turned_at >= moved_at && printed_at >= turned_at;
  if (!pass) d << "; " << testing::describe(out);
  return {pass, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"pitfall-table", pitfall_table},
      {"strict-instrumented-equivalence", equivalence},
      {"permissive-oracle", permissive_oracle},
      {"safety-fuzz", safety_fuzz},
      {"boundary-truncation", boundary_truncation},
      {"kick-applicability", kick_applicability},
      {"protocol-loss-tolerance", protocol_loss},
      {"corpus-ground-truth", corpus_ground_truth},
      {"straight-line-blocking", straight_line},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
