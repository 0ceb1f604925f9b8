// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string_view>

namespace robojs::lang::rt {

// Runtime check functions targeted by the instrumenter. User code may not
// declare these names.
inline constexpr std::string_view kRead = "checkedRead";
inline constexpr std::string_view kWrite = "checkedWrite";
inline constexpr std::string_view kAdd = "checkedAdd";
inline constexpr std::string_view kSub = "checkedSub";
inline constexpr std::string_view kMul = "checkedMul";
inline constexpr std::string_view kDiv = "checkedDiv";
inline constexpr std::string_view kMod = "checkedMod";
inline constexpr std::string_view kNeg = "checkedNeg";
inline constexpr std::string_view kLT = "checkedLT";
inline constexpr std::string_view kLE = "checkedLE";
inline constexpr std::string_view kGT = "checkedGT";
inline constexpr std::string_view kGE = "checkedGE";
inline constexpr std::string_view kLooseEq = "checkedLooseEq";
inline constexpr std::string_view kLooseNe = "checkedLooseNe";
inline constexpr std::string_view kCond = "checkedCond";
inline constexpr std::string_view kAssignCond = "checkedAssignCond";
inline constexpr std::string_view kMember = "checkedMember";
inline constexpr std::string_view kCall = "checkedCall";
inline constexpr std::string_view kArity = "checkedArity";

inline constexpr std::array<std::string_view, 19> kAll = {
    kRead, kWrite, kAdd,     kSub,     kMul,  kDiv,       kMod,
    kNeg,  kLT,    kLE,      kGT,      kGE,   kLooseEq,   kLooseNe,
    kCond, kAssignCond, kMember, kCall, kArity};

/// First statement of every instrumented program.
inline constexpr std::string_view kDirective = "use robojs";

inline bool is_check_function(std::string_view name) {
  for (auto n : kAll) {
    if (n == name) return true;
  }
  return false;
}

}  // namespace robojs::lang::rt
