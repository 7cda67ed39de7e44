#include "eprgame/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace eprgame {
namespace {

using boost::multiprecision::cpp_int;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

cpp_int pow10(int n) {
  cpp_int r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

// cpp_int reads a leading 0 as an octal prefix.
cpp_int decimal_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return cpp_int{std::string(s)};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [+-]digits
cpp_int parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  cpp_int v = decimal_digits(s);
  return negative ? cpp_int(-v) : v;
}

// [+-]digits[.digits][(e|E)[+-]digits]
Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<int>(frac_part.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  if (exponent > 4000 || exponent < -4000) {
    throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
  }
  cpp_int mantissa = decimal_digits(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(mantissa * pow10(exponent));
  return Rational(mantissa, pow10(-exponent));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(trim(s.substr(0, slash)), text);
    cpp_int den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(s, text);
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  return parse_rational(to_string(v));
}

std::string to_string(const Rational& v) { return v.str(); }

std::string to_string(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

}  // namespace eprgame
