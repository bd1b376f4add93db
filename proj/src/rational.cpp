#include "hakencx/rational.hpp"

#include "hakencx/errors.hpp"

#include <cctype>

namespace hakencx {

std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_display_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return to_fraction_string(value);
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("malformed rational: '" + std::string(text) + "'");
  boost::multiprecision::cpp_int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const auto num = parse_integer(text.substr(0, slash), true);
  const auto den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace hakencx
