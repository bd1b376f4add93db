#pragma once

#include "hakencx/rational.hpp"

#include <string>

namespace hakencx {

enum class Relation { Equal, LessEqual, GreaterEqual };

inline bool holds(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::Equal:
      return lhs == rhs;
    case Relation::LessEqual:
      return lhs <= rhs;
    case Relation::GreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::Equal:
      return "=";
    case Relation::LessEqual:
      return "<=";
    case Relation::GreaterEqual:
      return ">=";
  }
  return "?";
}

}  // namespace hakencx
