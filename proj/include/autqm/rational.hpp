#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace autqm {

/// Exact rational used for every quasimorphism value and bound.
using Rational = boost::rational<std::int64_t>;

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Prints in lowest terms as `p/q`, or `p` when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" +
         std::to_string(r.denominator());
}

/// Parses `p`, `-p` or `p/q`.
Rational parse_rational(const std::string& text);

}  // namespace autqm
