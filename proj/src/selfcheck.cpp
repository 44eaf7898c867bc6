#include "upscalc/selfcheck.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "upscalc/bounds.hpp"
#include "upscalc/braid.hpp"
#include "upscalc/homogenize.hpp"
#include "upscalc/seifert.hpp"
#include "upscalc/semigroup.hpp"
#include "upscalc/signature.hpp"
#include "upscalc/upsilon.hpp"

namespace upscalc {

namespace {

CheckResult ok(const std::string& name, const std::string& summary) {
  return {name, true, summary};
}

CheckResult bad(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

std::string pq(long p, long q) {
  return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

CheckResult check_route_equivalence() {
  const std::string name = "route-equivalence";
  long pairs = 0;
  for (long p = 2; p <= 40; ++p)
    for (long q = p + 1; q <= 40; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      if (!(ups_torus_euclid(p, q) == ups_torus_semigroup(p, q)))
        return bad(name, "euclid and semigroup routes disagree on " + pq(p, q));
    }
  return ok(name, std::to_string(pairs) + " coprime pairs up to 40 agree across both routes");
}

CheckResult check_decomposition_8_11() {
  const std::string name = "decomposition-8-11";
  EuclidDecomposition want{{{8, 1}, {3, 2}, {2, 1}}};
  if (!(euclid_decompose(8, 11) == want))
    return bad(name, "euclid_decompose(8,11) produced the wrong term list");
  PLFunction sum = ups_torus_euclid(8, 9)
                       .add(ups_torus_euclid(3, 4).scale(make_rational(2)))
                       .add(ups_torus_euclid(2, 3));
  if (!(ups_torus_euclid(8, 11) == sum))
    return bad(name, "T(8,11) does not split as T(8,9) + 2 T(3,4) + T(2,3)");
  return ok(name, "T(8,11) decomposition and additivity identity hold");
}

CheckResult check_staircase_identities() {
  const std::string name = "staircase-identities";
  for (long n = 2; n <= 20; ++n)
    if (!(ups_staircase(n) == ups_torus_semigroup(n, n + 1)))
      return bad(name, "staircase formula disagrees with semigroup route at n=" +
                           std::to_string(n));
  for (long n = 2; n <= 8; ++n)
    for (long k = 1; k <= 6; ++k)
      if (!(ups_torus_euclid(n, n * k + 1) == ups_staircase(n).scale(make_rational(k))))
        return bad(name, pq(n, n * k + 1) + " is not k times the staircase");
  return ok(name, "staircase matches semigroup route (n<=20) and scales for q=nk+1");
}

CheckResult check_values_at_one() {
  const std::string name = "values-at-one";
  Rational one = make_rational(1);
  for (long n = 1; n <= 12; ++n) {
    if (ups_torus_euclid(3, 3 * n + 1).eval(one) != make_rational(-2 * n))
      return bad(name, pq(3, 3 * n + 1) + " value at t=1 is wrong");
    if (ups_torus_euclid(3, 3 * n + 2).eval(one) != make_rational(-2 * n - 1))
      return bad(name, pq(3, 3 * n + 2) + " value at t=1 is wrong");
  }
  return ok(name, "T(3,q) values at t=1 match -2n and -2n-1 for n<=12");
}

CheckResult check_blowup_recursion() {
  const std::string name = "blowup-recursion";
  long pairs = 0;
  for (long a = 2; a <= 24; ++a)
    for (long b = a + 1; b <= 25; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++pairs;
      CountingFunction got =
          min_convolve(torus_counting(a, b - a), torus_counting(a, a + 1));
      if (!(got == torus_counting(a, b)))
        return bad(name, "counting-function recursion fails for " + pq(a, b));
    }
  return ok(name, std::to_string(pairs) + " blowup recursions verified up to 25");
}

CheckResult check_universal_properties() {
  const std::string name = "universal-properties";
  Rational two = make_rational(2);
  for (long p = 2; p <= 20; ++p)
    for (long q = p + 1; q <= 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      PLFunction f = ups_torus_euclid(p, q);
      Rational g4 = make_rational((p - 1) * (q - 1), 2);
      if (f.eval(make_rational(0)) != 0) return bad(name, pq(p, q) + " nonzero at t=0");
      if (!f.is_convex()) return bad(name, pq(p, q) + " is not convex");
      for (const auto& bp : f.breakpoints()) {
        if (f.eval(two - bp.t) != bp.v)
          return bad(name, pq(p, q) + " breaks the t <-> 2-t symmetry");
        if (rational_abs(bp.v) > g4 * bp.t && bp.t <= 1)
          return bad(name, pq(p, q) + " violates the slice-genus slope bound");
      }
    }
  // a mixed-sign sum keeps the value at 0 and the symmetry
  PLFunction g = ups_expr(KnotExpr::parse("T(8,11) # -T(8,9) # -2*T(3,4) # -T(2,3)"));
  if (!(g == PLFunction())) return bad(name, "telescoping sum is not the zero function");
  return ok(name, "value at 0, symmetry, slope bound, and convexity all hold");
}

CheckResult check_signature_gate() {
  const std::string name = "signature-gate";
  for (long p = 2; p <= 12; ++p)
    for (long q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      SeifertMatrix v = seifert_matrix(torus_braid(static_cast<int>(p), static_cast<int>(q)));
      if (!alexander_check(v, p, q))
        return bad(name, "Seifert matrix of " + pq(p, q) + " fails the Alexander gate");
    }
  for (long n = 1; n <= 10; ++n)
    if (classical_signature(torus_braid(2, static_cast<int>(2 * n + 1))) != -2 * n)
      return bad(name, "classical signature of " + pq(2, 2 * n + 1) + " is wrong");
  std::mt19937 rng(20240817);
  int found = 0;
  while (found < 25) {
    int strands = 2 + static_cast<int>(rng() % 3);
    int len = 6 + static_cast<int>(rng() % 9);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
      int gen = 1 + static_cast<int>(rng() % (strands - 1));
      letters.push_back(rng() % 2 ? gen : -gen);
    }
    BraidWord b(strands, letters);
    if (b.closure_components() != 1) continue;
    ++found;
    if (classical_signature(b.mirror()) != -classical_signature(b))
      return bad(name, "mirror does not negate the signature on " + b.to_string());
  }
  return ok(name, "Alexander gate to 12, T(2,odd) signatures, 25 mirror words");
}

CheckResult check_large_braid_signature() {
  const std::string name = "large-braid-signature";
  BraidWord b = BraidWord(3, {1, 1, 1, 2, 2, 2, 2, 2, 2, 2}).power(16);
  if (b.closure_components() != 1) return bad(name, "closure of (a1^3 a2^7)^16 is not a knot");
  SeifertMatrix v = seifert_matrix(b);
  int sigma = lt_signature(v, OmegaPoint(make_rational(3, 4)));
  if (sigma != -128)
    return bad(name, "signature at s=3/4 is " + std::to_string(sigma) + ", expected -128");
  return ok(name, "158x158 closure gives signature -128 at s=3/4");
}

CheckResult check_upsilon_signature_window() {
  const std::string name = "upsilon-signature-window";
  for (long q = 2; q <= 40; ++q) {
    if (q % 3 == 0) continue;
    TorusKnotSpec spec = TorusKnotSpec::make(3, q);
    Rational ups1 = ups_torus_euclid(spec.p, spec.q).eval(make_rational(1));
    int sigma = classical_signature(
        torus_braid(static_cast<int>(spec.p), static_cast<int>(spec.q)));
    if (rational_abs(ups1 - make_rational(sigma, 2)) > 2)
      return bad(name, pq(3, q) + " drifts more than 2 from half the signature");
  }
  return ok(name, "value at 1 stays within 2 of half the signature for T(3,q), q<=40");
}

CheckResult check_nonconvexity() {
  const std::string name = "nonconvexity-certificates";
  for (long n = 1; n <= 20; ++n)
    if (hom_ups_beta_n(n).profile.is_convex())
      return bad(name, "beta_" + std::to_string(n) + " profile is unexpectedly convex");
  for (long n = 6; n <= 20; ++n) {
    auto at_23 = kn_sandwich(n, make_rational(2, 3));
    auto at_1 = kn_sandwich(n, make_rational(1));
    if (!(at_23.second < at_1.first))
      return bad(name, "K_" + std::to_string(n) + " sandwich fails to certify an increase");
  }
  return ok(name, "beta_n profiles non-convex (n<=20); K_n increases from 2/3 to 1 (6<=n<=20)");
}

CheckResult check_bounds_grid() {
  const std::string name = "bounds-grid";
  TwistCertificate certK = TwistCertificate::from_torus_knot(TorusKnotSpec::make(2, 13));
  TwistCertificate certL = TwistCertificate::from_torus_knot(TorusKnotSpec::make(3, 7));
  BoundReport r = cobordism_report(certK, certL);
  if (r.triangle_lower != 0 || !r.improved_lower || *r.improved_lower != 2)
    return bad(name, "T(2,13) vs T(3,7) should give triangle 0 and improved bound 2");
  int selfpairs = 0;
  for (long p = 2; p <= 7 && selfpairs < 20; ++p)
    for (long q = p + 1; q <= 13 && selfpairs < 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      TwistCertificate c = TwistCertificate::from_torus_knot(TorusKnotSpec::make(p, q));
      auto imp = improved_bound(c, c);
      if (!imp || *imp != 0) return bad(name, "self-pair bound nonzero for " + pq(p, q));
      ++selfpairs;
    }
  for (long n = 2; n <= 8; ++n)
    for (long k = 1; k <= 5; ++k) {
      long q = n * k + 1;
      Rational g4 = make_rational((n - 1) * (q - 1), 2);
      TwistCertificate cert = TwistCertificate::twisted_braid_closure(n, k, g4);
      PLFunction f = ups_torus_euclid(n, q);
      if (!prop36_consistency(f, g4, cert))
        return bad(name, "twist inequality fails for " + pq(n, q));
      // the bound line touches the graph on [2/n, 4/n]
      Rational touch = std::min(make_rational(1), make_rational(4, n));
      if (prop36_slack(f, g4, cert, touch) != 0)
        return bad(name, "twist bound is not tight at t=" + to_string(touch) + " for " +
                             pq(n, q));
    }
  return ok(name, "improved bound 2 vs 0; 20 zero self-pairs; twist inequality tight");
}

CheckResult check_homogenization() {
  const std::string name = "homogenization-identities";
  int samples = 0;
  for (long n = 2; n <= 6 && samples < 20; ++n)
    for (long m : {1L, n, 2 * n + 1}) {
      for (const Rational& t :
           {make_rational(1, 4), make_rational(1, 2), make_rational(1)}) {
        if (samples >= 20) break;
        ++samples;
        if (hom_sig_torus_braid(n, m, t) !=
            make_rational(2) * hom_ups_torus_braid(n, m).profile.eval(t))
          return bad(name, "homogenized signature is not twice homogenized upsilon at n=" +
                               std::to_string(n) + ", m=" + std::to_string(m));
      }
    }
  for (long n = 2; n <= 6; ++n)
    for (long q = 2; q <= 25; ++q) {
      if (q == n || std::gcd(n, q) != 1) continue;
      for (const Rational& t :
           {make_rational(1, 4), make_rational(1, 2), make_rational(1)}) {
        try {
          defect_gap_check(n, q, t);
        } catch (const ValidationError& e) {
          return bad(name, e.what());
        }
      }
    }
  return ok(name, "signature/upsilon identity at 20 samples; defect gaps within t(n-1)/2");
}

}  // namespace

std::vector<CheckResult> run_selfchecks() {
  return {
      check_route_equivalence(),      check_decomposition_8_11(),
      check_staircase_identities(),   check_values_at_one(),
      check_blowup_recursion(),       check_universal_properties(),
      check_signature_gate(),         check_large_braid_signature(),
      check_upsilon_signature_window(), check_nonconvexity(),
      check_bounds_grid(),            check_homogenization(),
  };
}

}  // namespace upscalc
