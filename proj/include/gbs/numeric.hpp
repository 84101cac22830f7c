// numeric.hpp — exact arbitrary-precision arithmetic used throughout the
// library core.  All group-theoretic quantities (labels, indices, moduli)
// are integers or rationals that can overflow fixed-width types under
// composition, so the core never touches floating point or int64 math.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbs {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer absInt(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int signInt(const Integer& a) {
  if (a > 0) return 1;
  if (a < 0) return -1;
  return 0;
}

// gcd of absolute values; gcd(0, a) = |a|.
inline Integer gcdInt(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(absInt(a), absInt(b));
}

inline Integer lcmInt(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return absInt(a) / gcdInt(a, b) * absInt(b);
}

// Exact division; throws if b does not divide a.
inline Integer divExact(const Integer& a, const Integer& b, const char* what = "divExact") {
  if (b == 0) throw std::domain_error(std::string(what) + ": division by zero");
  if (a % b != 0)
    throw std::domain_error(std::string(what) + ": " + b.str() + " does not divide " + a.str());
  return a / b;
}

inline bool divides(const Integer& a, const Integer& b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

inline std::string toString(const Integer& a) { return a.str(); }

inline std::string toString(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Conversion helper for JSON output; throws when the value does not fit.
inline std::int64_t toInt64(const Integer& a, const char* what = "toInt64") {
  if (a > Integer(INT64_MAX) || a < Integer(INT64_MIN))
    throw std::overflow_error(std::string(what) + ": value " + a.str() + " exceeds 64-bit range");
  return static_cast<std::int64_t>(a);
}

}  // namespace gbs
