// SPDX-License-Identifier: Apache-2.0
#include "robojs/exec/value.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "robojs/lang/number_format.hpp"
#include "robojs/lang/printer.hpp"

namespace robojs::exec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Decodes one UTF-8 sequence at `i`; malformed bytes decode as themselves.
char32_t next_code_point(std::string_view s, size_t& i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  int len = c < 0x80 ? 1 : (c >> 5) == 6 ? 2 : (c >> 4) == 14 ? 3 : (c >> 3) == 30 ? 4 : 1;
  if (i + len > s.size()) len = 1;
  char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1f) : len == 3 ? (c & 0x0f) : (c & 0x07);
  for (int k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3f);
  i += len;
  return cp;
}

std::u16string to_utf16(std::string_view s) {
  std::u16string out;
  for (size_t i = 0; i < s.size();) {
    char32_t cp = next_code_point(s, i);
    if (cp >= 0x10000) {
      cp -= 0x10000;
      out.push_back(static_cast<char16_t>(0xD800 + (cp >> 10)));
      out.push_back(static_cast<char16_t>(0xDC00 + (cp & 0x3ff)));
    } else {
      out.push_back(static_cast<char16_t>(cp));
    }
  }
  return out;
}

bool is_js_whitespace(char32_t c) {
  switch (c) {
    case 0x09: case 0x0a: case 0x0b: case 0x0c: case 0x0d: case 0x20:
    case 0xa0: case 0x1680: case 0x2028: case 0x2029: case 0x202f:
    case 0x205f: case 0x3000: case 0xfeff:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200a;
  }
}

std::string_view trim_js(std::string_view s) {
  size_t begin = 0;
  while (begin < s.size()) {
    size_t i = begin;
    if (!is_js_whitespace(next_code_point(s, i))) break;
    begin = i;
  }
  size_t end = begin;
  for (size_t i = begin; i < s.size();) {
    if (!is_js_whitespace(next_code_point(s, i))) end = i;
  }
  return s.substr(begin, end - begin);
}

bool all_digits(std::string_view s, int base) {
  if (s.empty()) return false;
  for (char c : s) {
    int d = c >= '0' && c <= '9' ? c - '0'
            : c >= 'a' && c <= 'z' ? c - 'a' + 10
            : c >= 'A' && c <= 'Z' ? c - 'A' + 10
                                   : 99;
    if (d >= base) return false;
  }
  return true;
}

double parse_radix(std::string_view digits, int base) {
  double v = 0;
  for (char c : digits) {
    int d = c <= '9' ? c - '0' : (c | 0x20) - 'a' + 10;
    v = v * base + d;
  }
  return v;
}

// StrUnsignedDecimalLiteral: Infinity | digits [. digits] [exp] | . digits [exp]
bool valid_decimal(std::string_view s) {
  if (s == "Infinity") return true;
  size_t i = 0;
  size_t int_digits = 0, frac_digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++int_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t exp_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

std::string number_for_log(double v) {
  if (v == 0 && std::signbit(v)) return "-0";
  return lang::format_number(v);
}

// ToPrimitive for the admitted kinds: functions become their source text.
Value to_primitive(const Value& v) {
  if (const auto* f = std::get_if<FunctionRef>(&v)) return (*f)->source;
  return v;
}

// Abstract IsLessThan; nullopt stands for JavaScript's undefined result.
std::optional<bool> less_than(const Value& a, const Value& b) {
  Value pa = to_primitive(a), pb = to_primitive(b);
  if (is_string(pa) && is_string(pb)) {
    return to_utf16(std::get<std::string>(pa)) < to_utf16(std::get<std::string>(pb));
  }
  double x = to_number(pa), y = to_number(pb);
  if (std::isnan(x) || std::isnan(y)) return std::nullopt;
  return x < y;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out + "\"";
}

// util.inspect quoting for strings nested in %o / %O.
std::string inspect_string(std::string_view s) {
  char quote = '\'';
  if (s.find('\'') != std::string_view::npos) {
    if (s.find('"') == std::string_view::npos) {
      quote = '"';
    } else if (s.find('`') == std::string_view::npos) {
      quote = '`';
    }
  }
  std::string out(1, quote);
  for (unsigned char c : s) {
    if (c == static_cast<unsigned char>(quote)) {
      out += '\\';
      out.push_back(static_cast<char>(c));
    } else if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else if (c == '\r') {
      out += "\\r";
    } else if (c == '\b') {
      out += "\\b";
    } else if (c == '\f') {
      out += "\\f";
    } else if (c == '\v') {
      out += "\\v";
    } else if (c < 0x20 || c == 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02X", c);
      out += buf;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  out.push_back(quote);
  return out;
}

double parse_int_prefix(std::string_view text) {
  std::string_view s = trim_js(text);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  int base = 10;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s.remove_prefix(2);
  }
  size_t n = 0;
  while (n < s.size() && all_digits(s.substr(n, 1), base)) ++n;
  if (n == 0) return kNaN;
  double v = base == 10 ? std::strtod(std::string(s.substr(0, n)).c_str(), nullptr)
                        : parse_radix(s.substr(0, n), base);
  return neg ? -v : v;
}

double parse_float_prefix(std::string_view text) {
  std::string_view s = trim_js(text);
  bool neg = false;
  std::string_view body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  if (body.substr(0, 8) == "Infinity") {
    return neg ? -std::numeric_limits<double>::infinity()
               : std::numeric_limits<double>::infinity();
  }
  // longest prefix that is a valid decimal literal
  for (size_t n = body.size(); n > 0; --n) {
    if (valid_decimal(body.substr(0, n)) && body.substr(0, n) != "Infinity") {
      double v = std::strtod(std::string(body.substr(0, n)).c_str(), nullptr);
      return neg ? -v : v;
    }
  }
  return kNaN;
}

}  // namespace

FunctionRef make_native(std::string ns, std::string name, int arity, NativeFn fn) {
  auto f = std::make_shared<Function>();
  f->qualified = ns.empty() ? name : ns + "." + name;
  f->source = "function " + name + "() { [native code] }";
  f->name = std::move(name);
  f->native = std::move(fn);
  f->arity = arity;
  return f;
}

double string_to_number(std::string_view text) {
  std::string_view s = trim_js(text);
  if (s.empty()) return 0;
  if (s.size() > 2 && s[0] == '0') {
    char p = s[1] | 0x20;
    int base = p == 'x' ? 16 : p == 'o' ? 8 : p == 'b' ? 2 : 0;
    if (base) {
      auto digits = s.substr(2);
      return all_digits(digits, base) ? parse_radix(digits, base) : kNaN;
    }
  }
  bool neg = false;
  std::string_view body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  if (!valid_decimal(body)) return kNaN;
  double v = body == "Infinity" ? std::numeric_limits<double>::infinity()
                                : std::strtod(std::string(body).c_str(), nullptr);
  return neg ? -v : v;
}

double to_number(const Value& v) {
  return std::visit(
      [](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return kNaN;
        } else if constexpr (std::is_same_v<T, double>) {
          return x;
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? 1 : 0;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return string_to_number(x);
        } else {
          return string_to_number(x->source);
        }
      },
      v);
}

bool to_boolean(const Value& v) {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return false;
        } else if constexpr (std::is_same_v<T, double>) {
          return !(x == 0 || std::isnan(x));
        } else if constexpr (std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return !x.empty();
        } else {
          return true;
        }
      },
      v);
}

std::string to_js_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, double>) {
          return lang::format_number(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return x->source;
        }
      },
      v);
}

bool strict_equals(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (is_number(a)) return std::get<double>(a) == std::get<double>(b);
  if (is_function(a)) return std::get<FunctionRef>(a) == std::get<FunctionRef>(b);
  return a == b;
}

bool loose_equals(const Value& a, const Value& b) {
  if (a.index() == b.index()) return strict_equals(a, b);
  if (is_undefined(a) || is_undefined(b)) return false;
  if (is_boolean(a)) return loose_equals(Value{to_number(a)}, b);
  if (is_boolean(b)) return loose_equals(a, Value{to_number(b)});
  if (is_function(a)) return loose_equals(to_primitive(a), b);
  if (is_function(b)) return loose_equals(a, to_primitive(b));
  // number and string
  return to_number(a) == to_number(b);
}

bool js_compare(lang::BinaryOp op, const Value& a, const Value& b) {
  using lang::BinaryOp;
  switch (op) {
    case BinaryOp::Less:
      return less_than(a, b).value_or(false);
    case BinaryOp::Greater:
      return less_than(b, a).value_or(false);
    case BinaryOp::LessEqual: {
      auto r = less_than(b, a);
      return r.has_value() && !*r;
    }
    case BinaryOp::GreaterEqual: {
      auto r = less_than(a, b);
      return r.has_value() && !*r;
    }
    default:
      return false;
  }
}

Value js_add(const Value& a, const Value& b) {
  Value pa = to_primitive(a), pb = to_primitive(b);
  if (is_string(pa) || is_string(pb)) return to_js_string(pa) + to_js_string(pb);
  return to_number(pa) + to_number(pb);
}

std::string inspect(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return number_for_log(*d);
  if (const auto* f = std::get_if<FunctionRef>(&v)) {
    return "[Function: " + (*f)->name + "]";
  }
  return to_js_string(v);
}

std::string format_log(const std::vector<Value>& args) {
  std::string out;
  size_t next = 0;
  if (args.size() > 1 && is_string(args[0])) {
    const std::string& fmt = std::get<std::string>(args[0]);
    next = 1;
    size_t last = 0;
    for (size_t i = 0; i + 1 < fmt.size(); ++i) {
      if (fmt[i] != '%') continue;
      char c = fmt[i + 1];
      if (c == '%') {
        out += fmt.substr(last, i - last) + "%";
        last = i + 2;
        ++i;
        continue;
      }
      if (next >= args.size()) continue;
      std::string piece;
      const Value& arg = args[next];
      switch (c) {
        case 's':
          piece = is_number(arg) ? number_for_log(std::get<double>(arg))
                                 : to_js_string(arg);
          break;
        case 'd':
          piece = number_for_log(to_number(arg));
          break;
        case 'i':
          piece = number_for_log(std::trunc(parse_int_prefix(to_js_string(arg))));
          break;
        case 'f':
          piece = number_for_log(parse_float_prefix(to_js_string(arg)));
          break;
        case 'j':
          if (const auto* d = std::get_if<double>(&arg)) {
            piece = std::isfinite(*d) ? lang::format_number(*d) : "null";
          } else if (is_string(arg)) {
            piece = json_string(std::get<std::string>(arg));
          } else if (is_boolean(arg)) {
            piece = to_js_string(arg);
          } else {
            piece = "undefined";
          }
          break;
        case 'o':
        case 'O':
          piece = is_string(arg) ? inspect_string(std::get<std::string>(arg))
                                 : inspect(arg);
          break;
        case 'c':
          break;
        default:
          continue;
      }
      out += fmt.substr(last, i - last) + piece;
      last = i + 2;
      ++next;
      ++i;
    }
    out += fmt.substr(last);
  }
  for (size_t i = next; i < args.size(); ++i) {
    if (i > 0) out += ' ';
    out += is_string(args[i]) ? std::get<std::string>(args[i]) : inspect(args[i]);
  }
  return out;
}

std::string describe_value(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return lang::quote(*s);
  if (const auto* d = std::get_if<double>(&v)) return number_for_log(*d);
  if (const auto* f = std::get_if<FunctionRef>(&v)) {
    return "the function " + (*f)->qualified;
  }
  return to_js_string(v);
}

}  // namespace robojs::exec
