// SPDX-License-Identifier: Apache-2.0
#include "robojs/lang/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace robojs::lang {

std::string format_number(double value) {
  if (std::isnan(value)) return "NaN";
  if (value == 0) return "0";
  if (std::isinf(value)) return value < 0 ? "-Infinity" : "Infinity";

  std::string sign = value < 0 ? "-" : "";
  double magnitude = std::fabs(value);

  // Shortest digits in scientific form: d[.ddd]e[+-]x
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), magnitude,
                           std::chars_format::scientific);
  std::string sci(buf.data(), res.ptr);
  auto e_pos = sci.find('e');
  std::string mantissa = sci.substr(0, e_pos);
  int exponent = std::atoi(sci.c_str() + e_pos + 1);
  std::string digits;
  for (char c : mantissa) {
    if (c != '.') digits.push_back(c);
  }
  int k = static_cast<int>(digits.size());
  int n = exponent + 1;  // position of the decimal point

  std::string out;
  if (k <= n && n <= 21) {
    out = digits + std::string(n - k, '0');
  } else if (0 < n && n <= 21) {
    out = digits.substr(0, n) + "." + digits.substr(n);
  } else if (-6 < n && n <= 0) {
    out = "0." + std::string(-n, '0') + digits;
  } else {
    std::string exp = (n - 1 >= 0 ? "+" : "-") + std::to_string(std::abs(n - 1));
    out = digits.substr(0, 1);
    if (k > 1) out += "." + digits.substr(1);
    out += "e" + exp;
  }
  return sign + out;
}

}  // namespace robojs::lang
