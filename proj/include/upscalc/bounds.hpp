#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upscalc/braid.hpp"
#include "upscalc/plfunction.hpp"
#include "upscalc/upsilon.hpp"

namespace upscalc {

enum class CertProvenance { TwistedBraidClosure, QuasipositiveBraidIndex, Manual };

// Certified bounds for the twist parameters n_K, k_K, m_K; the exact
// values are defined by minimality over all cobordisms and are not
// computed here.  Directions of soundness: n_lower <= n_K, k_lower <= k_K,
// m_K <= m_upper.
struct TwistCertificate {
  long n_lower = 1;
  long k_lower = 0;
  std::optional<long> m_upper;  // nullopt = infinity
  Rational g4;
  CertProvenance provenance = CertProvenance::Manual;
  bool g4_verified = false;

  // Certificate for the closure of Delta^{2k} a_1..a_{n-1} alpha:
  // n_K = m_K = n and k_K >= k.
  static TwistCertificate twisted_braid_closure(long n, long k, Rational g4);
  // From the quasi-positive braid index bound alone: m_K <= n.
  static TwistCertificate quasipositive_braid_index(long n, Rational g4);
  // For a positive torus knot T(p,q): n = p, k = floor(q/p), m = p.
  static TwistCertificate from_torus_knot(const TorusKnotSpec& spec);

  // cert(n=3,k=2,g4=6) with optional m=... field.
  static TwistCertificate parse(const std::string& text);
};

struct BoundReport {
  Rational triangle_lower;
  std::optional<Rational> triangle_upper;  // reported for unmirrored sums only
  std::optional<Rational> improved_lower;  // absent when the rule is inapplicable
  Rational best_lower;
  std::vector<std::pair<std::string, Rational>> witnesses;
};

// |g4K - g4L| and, when meaningful, g4K + g4L.
std::pair<Rational, Rational> triangle_bounds(const Rational& g4K, const Rational& g4L);

// k_lower(L) * (n_lower(L) - m_upper(K)) + g4(K) - g4(L); nullopt when
// m_upper(K) is infinite.
std::optional<Rational> improved_bound(const TwistCertificate& certK,
                                       const TwistCertificate& certL);

BoundReport cobordism_report(const TwistCertificate& certK, const TwistCertificate& certL);

// (l(beta) - n + 1) / 2: certified lower bound for tau and g4 of the closure.
Rational slice_bennequin_tau(const BraidWord& b);

// |l(beta) - l(beta_prime)| <= n - b.
bool jones_inequality_check(const BraidWord& beta, const BraidWord& beta_prime, long b);

enum class BraidIndexScope { AllConcordantKnots, QuasipositiveComparatorsOnly };

struct BraidIndexBound {
  long bound;
  BraidIndexScope scope;
};

// Braid index >= n for knots concordant to the certified knot; the
// unconditional form needs k >= n-1 plus the extra positive row.
std::optional<BraidIndexBound> concordance_braid_index_bound(const TwistCertificate& cert,
                                                            bool extra_positive_row);

// Both clauses of the Upsilon twist inequality with the certificate's
// sound bounds substituted.
bool prop36_consistency(const PLFunction& f, const Rational& g4, const TwistCertificate& cert);

// Slack of the second clause at a given t.
Rational prop36_slack(const PLFunction& f, const Rational& g4, const TwistCertificate& cert,
                      const Rational& t);

}  // namespace upscalc
