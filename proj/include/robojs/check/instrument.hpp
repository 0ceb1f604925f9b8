// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "robojs/check/arity_table.hpp"
#include "robojs/lang/ast.hpp"

namespace robojs::check {

struct AlreadyInstrumented : std::logic_error {
  AlreadyInstrumented() : std::logic_error("program is already instrumented") {}
};

/// True when the program starts with the instrumentation prelude.
bool is_instrumented(const lang::Program& program);

/// Rewrites `program` so that every checked operation calls a runtime check
/// function carrying the original source position. The result runs under
/// permissive semantics with the same observable behavior as the input
/// under strict semantics. Throws AlreadyInstrumented on a second
/// application.
lang::Program instrument_program(const lang::Program& program,
                                 const ArityTable& arities = ArityTable::standard());

/// instrument_program, printed as source text.
std::string instrument(const lang::Program& program,
                       const ArityTable& arities = ArityTable::standard());

/// `checkedArity("f", n);` for the start of the body of `fn`.
lang::StmtPtr function_arity_prologue(const lang::FunctionDecl& fn);

}  // namespace robojs::check
