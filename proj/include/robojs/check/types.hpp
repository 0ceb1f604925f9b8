// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <unordered_map>

#include "robojs/check/resolver.hpp"

namespace robojs::check {

/// Set of runtime kinds an expression may produce when its evaluation
/// reaches the point of use without aborting.
using TypeMask = std::uint8_t;
inline constexpr TypeMask kNumber = 1;
inline constexpr TypeMask kString = 2;
inline constexpr TypeMask kBoolean = 4;
inline constexpr TypeMask kFunction = 8;
inline constexpr TypeMask kUndefined = 16;
inline constexpr TypeMask kAnyType = 31;

/// Flow-insensitive inference: a variable's type is the union of every value
/// ever assigned to it (declared-initializer tracking plus assignments).
class TypeInference {
 public:
  explicit TypeInference(const Resolution& resolution);

  TypeMask type_of(const lang::Expr& expr) const;
  /// Type of any value read from `d`; null means undeclared.
  TypeMask variable(const Declaration* d) const;

 private:
  TypeMask compute(const lang::Expr& expr) const;

  const Resolution& res_;
  std::unordered_map<const Declaration*, TypeMask> vars_;
};

}  // namespace robojs::check
