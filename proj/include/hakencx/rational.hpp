#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hakencx {

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

/// "p/q" form, with q printed even when it is 1.
std::string to_fraction_string(const Rational& value);

/// Human form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_display_string(const Rational& value);

/// Accepts "p", "p/q" and "-p/q".
Rational parse_rational(std::string_view text);

}  // namespace hakencx
