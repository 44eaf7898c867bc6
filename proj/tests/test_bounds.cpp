#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upscalc/bounds.hpp"
#include "upscalc/errors.hpp"

using namespace upscalc;

TEST_CASE("certificate constructors") {
  TwistCertificate c = TwistCertificate::twisted_braid_closure(3, 2, make_rational(6));
  CHECK(c.n_lower == 3);
  CHECK(c.k_lower == 2);
  CHECK(c.m_upper == 3);
  CHECK(c.provenance == CertProvenance::TwistedBraidClosure);

  TwistCertificate q = TwistCertificate::quasipositive_braid_index(4, make_rational(3));
  CHECK(q.n_lower == 1);
  CHECK(q.m_upper == 4);

  TwistCertificate t = TwistCertificate::from_torus_knot(TorusKnotSpec::make(2, 13));
  CHECK(t.n_lower == 2);
  CHECK(t.k_lower == 6);
  CHECK(t.m_upper == 2);
  CHECK(t.g4 == make_rational(6));

  TwistCertificate u = TwistCertificate::from_torus_knot(TorusKnotSpec{});
  CHECK(u.g4 == 0);
  CHECK(u.m_upper == 1);
}

TEST_CASE("certificate literal parsing") {
  TwistCertificate c = TwistCertificate::parse("cert(n=3, k=2, g4=6)");
  CHECK(c.n_lower == 3);
  CHECK(c.k_lower == 2);
  CHECK(c.g4 == make_rational(6));
  CHECK(c.m_upper == 3);  // defaults to n
  CHECK(c.provenance == CertProvenance::Manual);

  CHECK_FALSE(TwistCertificate::parse("cert(n=2,k=1,g4=1,m=inf)").m_upper.has_value());
  CHECK(TwistCertificate::parse("cert(n=2,k=1,g4=7/2,m=5)").g4 == make_rational(7, 2));
  CHECK_THROWS_AS(TwistCertificate::parse("cert(n=3,k=2)"), ParseError);
  CHECK_THROWS_AS(TwistCertificate::parse("cert(n=3,k=2,g4=6,m=2)"), ParseError);  // n > m
  CHECK_THROWS_AS(TwistCertificate::parse("cert(n=3,k=2,g4=6,zz=1)"), ParseError);
  CHECK_THROWS_AS(TwistCertificate::parse("notacert"), ParseError);
}

TEST_CASE("triangle and improved bounds") {
  TwistCertificate k213 = TwistCertificate::from_torus_knot(TorusKnotSpec::make(2, 13));
  TwistCertificate t37 = TwistCertificate::from_torus_knot(TorusKnotSpec::make(3, 7));
  auto [lo, hi] = triangle_bounds(k213.g4, t37.g4);
  CHECK(lo == 0);
  CHECK(hi == 12);
  CHECK(improved_bound(k213, t37) == make_rational(2));
  CHECK(improved_bound(t37, t37) == make_rational(0));

  // unknot vs T(3,7): improved bound is -2 and loses to the triangle
  TwistCertificate unknot = TwistCertificate::from_torus_knot(TorusKnotSpec{});
  CHECK(improved_bound(unknot, t37) == make_rational(-2));
  BoundReport r = cobordism_report(unknot, t37);
  CHECK(r.best_lower == make_rational(6));

  // infinite m: rule inapplicable, not an error
  TwistCertificate inf = TwistCertificate::parse("cert(n=2,k=1,g4=1,m=inf)");
  CHECK_FALSE(improved_bound(inf, t37).has_value());
  BoundReport r2 = cobordism_report(inf, t37);
  CHECK_FALSE(r2.improved_lower.has_value());
  CHECK(r2.best_lower == r2.triangle_lower);
}

TEST_CASE("report aggregation is monotone") {
  TwistCertificate k213 = TwistCertificate::from_torus_knot(TorusKnotSpec::make(2, 13));
  TwistCertificate t37 = TwistCertificate::from_torus_knot(TorusKnotSpec::make(3, 7));
  BoundReport r = cobordism_report(k213, t37);
  CHECK(r.triangle_lower == 0);
  CHECK(r.improved_lower == make_rational(2));
  CHECK(r.best_lower == 2);
  CHECK(r.best_lower >= r.triangle_lower);
  for (const auto& [name, value] : r.witnesses) CHECK(value <= r.best_lower);
}

TEST_CASE("slice-Bennequin tau bound") {
  CHECK(slice_bennequin_tau(torus_braid(2, 3)) == make_rational(1));
  CHECK(slice_bennequin_tau(torus_braid(3, 7)) == make_rational(6));
  CHECK(slice_bennequin_tau(BraidWord(2, {1, -1, 1})) == make_rational(0));
  CHECK_THROWS_AS(slice_bennequin_tau(torus_braid(2, 4)), std::invalid_argument);
}

TEST_CASE("writhe inequality from braid representatives") {
  CHECK(jones_inequality_check(torus_braid(2, 3), torus_braid(2, 3), 2));
  // stabilized trefoil on 3 strands vs the 2-strand representative
  BraidWord stab = BraidWord(3, {1, 1, 1, 2});
  CHECK(jones_inequality_check(stab, torus_braid(2, 3), 2));
  CHECK_FALSE(jones_inequality_check(BraidWord(3, {1, 1, 1, 1, 1, 1}), torus_braid(2, 3), 2));
}

TEST_CASE("concordance braid-index bounds") {
  auto both = concordance_braid_index_bound(
      TwistCertificate::twisted_braid_closure(3, 2, make_rational(7)), true);
  REQUIRE(both.has_value());
  CHECK(both->bound == 3);
  CHECK(both->scope == BraidIndexScope::AllConcordantKnots);

  auto qp_only = concordance_braid_index_bound(
      TwistCertificate::twisted_braid_closure(3, 1, make_rational(3)), true);
  REQUIRE(qp_only.has_value());
  CHECK(qp_only->scope == BraidIndexScope::QuasipositiveComparatorsOnly);

  auto small = concordance_braid_index_bound(
      TwistCertificate::twisted_braid_closure(2, 5, make_rational(5)), true);
  REQUIRE(small.has_value());
  CHECK(small->bound == 2);

  CHECK_FALSE(concordance_braid_index_bound(TwistCertificate::parse("cert(n=3,k=2,g4=6)"),
                                            true)
                  .has_value());  // manual provenance
}

TEST_CASE("twist inequality consistency") {
  PLFunction f = ups_torus_euclid(3, 7);
  Rational g4 = make_rational(6);
  TwistCertificate good = TwistCertificate::twisted_braid_closure(3, 2, g4);
  CHECK(prop36_consistency(f, g4, good));
  CHECK(prop36_slack(f, g4, good, make_rational(1)) == 0);

  TwistCertificate corrupt = good;
  corrupt.k_lower = 99;
  CHECK_FALSE(prop36_consistency(f, g4, corrupt));

  TwistCertificate trefoil = TwistCertificate::twisted_braid_closure(2, 1, make_rational(1));
  CHECK(prop36_consistency(ups_torus_euclid(2, 3), make_rational(1), trefoil));
}
