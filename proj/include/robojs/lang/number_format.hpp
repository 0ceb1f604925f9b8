// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace robojs::lang {

/// Number-to-string conversion with JavaScript semantics: shortest
/// round-trip digits, exponent form outside [1e-7, 1e21), "NaN",
/// "Infinity", and "0" for negative zero.
std::string format_number(double value);

}  // namespace robojs::lang
