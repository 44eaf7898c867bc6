#pragma once

#include <vector>

#include "upscalc/rational.hpp"

namespace upscalc {

// Dense integer polynomials, coefficient of t^i at index i.  Zero is the
// empty vector; nonzero polynomials keep a nonzero leading coefficient.
using Poly = std::vector<Int>;

Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Throws ValidationError if the division leaves a remainder.
Poly poly_div_exact(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);  // b must be monic
Int poly_eval(const Poly& p, const Int& x);
bool poly_is_zero(const Poly& p);

// x^n - 1.
Poly poly_xn_minus_1(long n);
// The n-th cyclotomic polynomial.
Poly cyclotomic(long n);

// +/- t^k stripped, sign fixed so the leading coefficient is positive.
Poly poly_normalize_units(Poly p);

}  // namespace upscalc
