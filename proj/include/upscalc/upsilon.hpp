#pragma once

#include <string>
#include <utility>
#include <vector>

#include "upscalc/plfunction.hpp"
#include "upscalc/rational.hpp"

namespace upscalc {

// Torus knot T(p,q), normalized so p < q; p = 1 is the unknot.
struct TorusKnotSpec {
  long p = 1;
  long q = 1;
  bool mirrored = false;

  static TorusKnotSpec make(long p, long q, bool mirrored = false);
  bool is_unknot() const { return p == 1; }
  bool operator==(const TorusKnotSpec&) const = default;
};

// Formal connected sum of (possibly mirrored) torus knots; empty = unknot.
struct KnotExpr {
  std::vector<std::pair<TorusKnotSpec, long>> summands;  // (spec, multiplicity)

  // expr := term ('#' term)*; term := ['-'] [int '*'] 'T(' int ',' int ')'
  static KnotExpr parse(const std::string& text);
  std::string render() const;
  bool operator==(const KnotExpr&) const = default;
};

// Euclid terms (r_i, q_i) with r_i >= 2, repeated r values aggregated.
struct EuclidDecomposition {
  std::vector<std::pair<long, long>> terms;
  bool operator==(const EuclidDecomposition&) const = default;
};

// Upsilon of T(n,n+1): breakpoints at t = 2i/n with value i(i-n).
PLFunction ups_staircase(long n);

EuclidDecomposition euclid_decompose(long p, long q);

// Route 1: sum of staircases along the Euclidean algorithm.
PLFunction ups_torus_euclid(long p, long q);

// Route 2: upper envelope of the lines -2 H(i) - (g - i) t over
// i in [imin, imax] on [0,1], then symmetrized.  The default window
// {0,...,2g} is the one the computation needs; widening it must not
// change the result.
PLFunction ups_torus_semigroup(long p, long q);
PLFunction ups_torus_semigroup_window(long p, long q, long imin_offset, long imax_offset);

PLFunction ups_expr(const KnotExpr& e);
Rational tau_expr(const KnotExpr& e);

// (p-1)(q-1)/2; rejects mirrored specs (g4 of mirrors inside sums is not
// computed by this library).
Rational g4_torus(const TorusKnotSpec& spec);

// Upsilon equals -g4 * t on [0, 2/p] exactly.
bool check_obs_small_t(const TorusKnotSpec& spec);
// Upsilon(t) - (-t g4 + floor(q/p)(p t - 2)); nonnegative for t in (2/p, 1].
Rational slack_obs(const TorusKnotSpec& spec, const Rational& t);

// Largest t* with f = -g4 * t on [0, t*]; requires matching initial slope.
Rational first_breakpoint(const PLFunction& f, const Rational& g4);
// ceil(2 / t*): lower bound for m_K and for the braid index of
// quasi-positive knots.
long mk_lower_bound(const PLFunction& f, const Rational& g4);

}  // namespace upscalc
