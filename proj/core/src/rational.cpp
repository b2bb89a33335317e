#include "oafd/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace oafd {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("denominator is zero");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class q = parse_integer(den);
    if (q == 0) throw std::invalid_argument("denominator is zero in '" + std::string(text) + "'");
    result = Rational(parse_integer(num), q);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(parse_integer(whole) * scale + parse_integer(frac), scale);
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    result = Rational(parse_integer(body));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace oafd
