#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace eprgame {

// Exact rationals. Expression templates are disabled so that `auto` and
// generic code behave the same for double and Rational.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline double abs_value(double v) { return std::abs(v); }
inline Rational abs_value(const Rational& v) { return boost::multiprecision::abs(v); }

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Rational&) { return true; }

// Accepts integers, decimals with optional exponent ("0.105", "1e-3") and
// fractions whose parts are integers ("7/50", "-3/4").
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Exact value of the shortest decimal that round-trips to `v`, so 0.01 maps
// to 1/100 rather than to its binary expansion.
Rational rational_from_double(double v);

std::string to_string(const Rational& v);
// Shortest round-trip representation.
std::string to_string(double v);

template <Scalar T>
T from_rational(const Rational& v) {
  if constexpr (std::same_as<T, double>) {
    return to_double(v);
  } else {
    return v;
  }
}

template <Scalar T>
T from_double(double v) {
  if constexpr (std::same_as<T, double>) {
    return v;
  } else {
    return rational_from_double(v);
  }
}

}  // namespace eprgame
