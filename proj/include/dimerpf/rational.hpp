#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "dimerpf/error.hpp"

namespace dimerpf {

using Rational = mpq_class;

// Accepts "n" or "n/d" with optional leading minus; rejects anything else.
inline Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  std::size_t slash = text.find('/');
  bool ok = slash == std::string::npos
                ? digits(text, start, text.size())
                : digits(text, start, slash) && digits(text, slash + 1, text.size());
  if (!ok) fail(ErrorKind::ParseError, "not a rational: \"" + text + "\"");
  if (slash != std::string::npos) {
    mpz_class den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator: \"" + text + "\"");
  }
  Rational q(text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Exact square root when q is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

inline Rational rational_power(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  for (int k = exponent < 0 ? -exponent : exponent; k > 0; --k) result *= b;
  return result;
}

}  // namespace dimerpf
