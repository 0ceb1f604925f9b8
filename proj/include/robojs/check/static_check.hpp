// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "robojs/check/arity_table.hpp"
#include "robojs/lang/ast.hpp"
#include "robojs/lang/diagnostic.hpp"

namespace robojs::check {

using CheckCategory = lang::Category;

inline constexpr std::array<CheckCategory, 8> kCheckCategories = {
    CheckCategory::LooseComparison,     CheckCategory::UninitializedVariable,
    CheckCategory::ConditionalAssignment, CheckCategory::OpTypeMismatch,
    CheckCategory::ArityMismatch,       CheckCategory::MissingMember,
    CheckCategory::NonBooleanCondition, CheckCategory::FunctionComparedAsValue};

bool is_check_category(lang::Category category);

/// Pre-run checks. Every reported site, if evaluation reaches it, aborts in
/// strict mode with the same category. Loose comparisons, calls with a known
/// wrong argument count, members that do not exist, and operators whose
/// operand types are certain to be rejected are reported; conditions are
/// left to the runtime.
lang::Diagnostics static_check(const lang::Program& program,
                               const ArityTable& arities = ArityTable::standard());

/// Additional conservative rules for categories that strict mode only
/// detects at runtime: reads of a `let x;` before any assignment in
/// straight-line order, and conditions that can never be a boolean.
lang::Diagnostics pattern_check(const lang::Program& program);

}  // namespace robojs::check
