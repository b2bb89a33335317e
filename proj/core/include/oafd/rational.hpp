#ifndef OAFD_RATIONAL_HPP
#define OAFD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace oafd {

// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
// terms with a positive denominator; values built from raw parts must go
// through make_rational() or parse_rational() to be canonical.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "n", "p/q" and finite decimals such as "-1.25". Throws
// std::invalid_argument with a short reason on malformed text or q = 0.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline const Rational& min_of(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

}  // namespace oafd

#endif  // OAFD_RATIONAL_HPP
