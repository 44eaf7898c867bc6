#pragma once

#include <string>
#include <vector>

#include "upscalc/braid.hpp"
#include "upscalc/polynomial.hpp"
#include "upscalc/rational.hpp"

namespace upscalc {

// Integral Seifert matrix of the surface obtained by Seifert's algorithm
// on a closed braid diagram (disks joined by twisted bands), in the brick
// basis: one generator per pair of consecutive bands in the same column.
struct SeifertMatrix {
  int size = 0;
  std::vector<std::vector<long>> entries;
  std::string source;  // braid word provenance
};

// Requires closure_components(b) == 1.
SeifertMatrix seifert_matrix(const BraidWord& b);

// Fraction-free integer determinant (Bareiss).
Int integer_det(std::vector<std::vector<Int>> m);

// det(V - t V^T) with unit factors (+/- t^k) stripped.
Poly alexander_polynomial(const SeifertMatrix& v);

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), unit-normalized.
Poly torus_alexander(long p, long q);

// Oracle gate: the matrix of torus_braid(p, q) must reproduce the torus
// Alexander polynomial.
bool alexander_check(const SeifertMatrix& v, long p, long q);

// Exact test whether omega = exp(i pi s) is a root of det(V - t V^T),
// via a fraction-free determinant over Z[zeta_m].  s in (0, 1].
bool omega_is_alexander_root(const SeifertMatrix& v, const Rational& s);

// Order of exp(i pi s) as a root of unity for s = a/b in lowest terms.
long omega_order(const Rational& s);

}  // namespace upscalc
