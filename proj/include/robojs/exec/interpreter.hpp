// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "robojs/exec/value.hpp"
#include "robojs/lang/ast.hpp"
#include "robojs/lang/diagnostic.hpp"

namespace robojs::exec {

enum class Mode { Strict, Permissive };

enum class ExecStatus { Completed, Aborted, Stopped, BudgetExhausted };

std::string_view to_string(ExecStatus status);

struct ExecOutcome {
  ExecStatus status = ExecStatus::Completed;
  std::vector<std::string> printed_output;
  std::uint64_t steps = 0;
  std::optional<lang::Diagnostic> diagnostic;  // set when Aborted
};

struct ExecOptions {
  Mode mode = Mode::Strict;
  std::uint64_t budget = 10'000'000;  // loop iterations plus function calls
  int max_call_depth = 256;
  std::function<void()> on_yield;                  // every statement boundary
  std::function<void(const std::string&)> on_print;
};

/// Thrown by natives (and the interpreter) to abort the program.
struct RuntimeError {
  lang::Diagnostic diagnostic;
};

/// Thrown by natives when they observe a stop request.
struct StopRequested {};

struct Binding {
  std::string name;
  Value value;
  bool initialized = false;
};

struct Env {
  std::shared_ptr<Env> parent;
  std::vector<Binding> vars;
  bool intrinsic = false;

  Binding* find_local(std::string_view name) {
    for (auto& b : vars) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }
};
using EnvPtr = std::shared_ptr<Env>;

struct ReplResult {
  bool ok = true;
  std::string text;
};

class Interpreter {
 public:
  explicit Interpreter(ExecOptions options = {});
  ~Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  /// Builtin namespace visible as `ns.member`.
  void add_namespace(const std::string& ns, std::vector<FunctionRef> members);
  /// Called when a run ends by abort, stop or budget exhaustion.
  void add_halt_hook(std::function<void()> hook);

  ExecOutcome run(std::shared_ptr<const lang::Program> program);
  /// Parses and runs; syntax errors give an Aborted outcome.
  ExecOutcome run_source(std::string_view source, std::string file_id = {});

  /// Thread-safe. Ends the current run at the next statement boundary or
  /// suspension point; once this returns no further I/O is dispatched.
  void stop();
  bool running() const { return running_; }

  /// Evaluates one expression in strict mode against the last run's
  /// top-level bindings.
  ReplResult repl_eval(std::string_view text);

  /// Runs `send` unless stop was requested; serialized against stop().
  bool dispatch(const std::function<void()>& send);
  std::stop_token stop_token() const;

  const ExecOptions& options() const { return options_; }
  ExecOptions& options() { return options_; }

  /// Appends a line of program output.
  void print(const std::string& line);

  // Used by the runtime check functions.
  const std::string& file_id() const { return file_id_; }

 private:
  friend class Evaluator;
  friend struct Intrinsics;

  struct Frame {
    const Function* fn;
    int argc;
    lang::SourceSpan span;
  };

  void reset_environment();
  EnvPtr intrinsic_env();

  ExecOptions options_;
  std::map<std::string, std::map<std::string, FunctionRef, std::less<>>, std::less<>>
      namespaces_;
  std::vector<std::function<void()>> halt_hooks_;

  // run state
  bool strict_ = true;
  std::uint64_t steps_ = 0;
  int depth_ = 0;
  std::vector<Frame> frames_;
  std::vector<std::string> output_;
  std::string file_id_;
  std::shared_ptr<const lang::Program> program_;
  EnvPtr globals_;
  EnvPtr intrinsics_;
  std::vector<std::weak_ptr<Env>> closure_envs_;
  Value return_value_;

  std::atomic<bool> running_{false};
  mutable std::mutex stop_mutex_;
  std::stop_source stop_source_;
  std::mutex dispatch_mutex_;
};

/// One-shot convenience: parse, run with no robot namespace.
ExecOutcome run_program(std::string_view source, Mode mode,
                        std::uint64_t budget = 10'000'000,
                        std::string file_id = {});

}  // namespace robojs::exec
