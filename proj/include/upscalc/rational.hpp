#pragma once

#include <gmpxx.h>

#include <string>

#include "upscalc/errors.hpp"

namespace upscalc {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical fraction (denominator > 0, reduced).
inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Int& num, const Int& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Smallest integer >= num/den.
inline Int ceil_div(const Int& num, const Int& den) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) q += 1;
  return q;
}

inline Int rational_ceil(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

}  // namespace upscalc
