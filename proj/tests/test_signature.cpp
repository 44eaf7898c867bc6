#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upscalc/braid.hpp"
#include "upscalc/errors.hpp"
#include "upscalc/seifert.hpp"
#include "upscalc/signature.hpp"

using namespace upscalc;

TEST_CASE("classical signatures of torus knots") {
  CHECK(classical_signature(torus_braid(2, 3)) == -2);
  CHECK(classical_signature(torus_braid(2, 7)) == -6);
  CHECK(classical_signature(torus_braid(3, 4)) == -6);
  CHECK(classical_signature(torus_braid(3, 5)) == -8);
  CHECK(classical_signature(torus_braid(3, 7)) == -8);
  CHECK(classical_signature(BraidWord(3, {1, -2, 1, -2})) == 0);  // amphichiral
}

TEST_CASE("classical signature on expressions is additive") {
  CHECK(classical_signature(KnotExpr::parse("T(2,3) # T(3,4)")) == -8);
  CHECK(classical_signature(KnotExpr::parse("-T(2,3)")) == 2);
  CHECK(classical_signature(KnotExpr::parse("2*T(2,3) # -T(3,4)")) == 2);
  CHECK(classical_signature(KnotExpr::parse("")) == 0);
}

TEST_CASE("Levine-Tristram profile of T(3,5)") {
  // jumps only at s in {2/15, 4/15, 8/15, 14/15}
  SeifertMatrix v = seifert_matrix(torus_braid(3, 5));
  CHECK(lt_signature(v, OmegaPoint(make_rational(1, 6))) == -2);
  CHECK(lt_signature(v, OmegaPoint(make_rational(1, 3))) == -4);
  CHECK(lt_signature(v, OmegaPoint(make_rational(1, 2))) == -4);
  CHECK(lt_signature(v, OmegaPoint(make_rational(2, 3))) == -6);
  CHECK(lt_signature(v, OmegaPoint(make_rational(5, 6))) == -6);
  CHECK(lt_signature(v, OmegaPoint(make_rational(1))) == -8);
  CHECK_THROWS_AS(lt_signature(v, OmegaPoint(make_rational(2, 15))), JumpPointError);
}

TEST_CASE("jump refusal at trefoil Alexander roots") {
  SeifertMatrix v = seifert_matrix(torus_braid(2, 3));
  CHECK_THROWS_AS(lt_signature(v, OmegaPoint(make_rational(1, 3))), JumpPointError);
  CHECK(lt_signature(v, OmegaPoint(make_rational(1, 2))) == -2);
  CHECK(lt_signature(v, OmegaPoint(make_rational(1, 4))) == 0);
}

TEST_CASE("omega parameter validation") {
  CHECK_THROWS_AS(OmegaPoint(make_rational(0)), DomainError);
  CHECK_THROWS_AS(OmegaPoint(make_rational(5, 4)), DomainError);
  CHECK(OmegaPoint(make_rational(1)).is_classical());
  CHECK_FALSE(OmegaPoint(make_rational(1, 2)).is_classical());
}

TEST_CASE("signature sweep flags jumps") {
  auto sweep = signature_sweep(seifert_matrix(torus_braid(2, 3)), 6);
  REQUIRE(sweep.size() == 5);
  CHECK(sweep[0].s == make_rational(1, 6));
  CHECK(sweep[0].sigma == 0);
  CHECK(sweep[1].jump);  // s = 1/3
  CHECK(sweep[2].sigma == -2);
  CHECK(sweep[4].sigma == -2);
}

TEST_CASE("mirror negates every signature") {
  BraidWord words[] = {BraidWord(3, {1, 1, 2, -1, 2, 2}), BraidWord(2, {1, 1, 1, 1, 1}),
                       BraidWord(4, {1, 2, 3, 1, 2, 3, 1})};
  for (const auto& b : words) {
    if (b.closure_components() != 1) continue;
    SeifertMatrix v = seifert_matrix(b);
    SeifertMatrix m = seifert_matrix(b.mirror());
    CHECK(classical_signature(m) == -classical_signature(v));
    for (const Rational& s : {make_rational(1, 4), make_rational(3, 5)}) {
      int sv, sm;
      try {
        sv = lt_signature(v, OmegaPoint(s));
        sm = lt_signature(m, OmegaPoint(s));
      } catch (const JumpPointError&) {
        continue;
      }
      CHECK(sm == -sv);
    }
  }
}

TEST_CASE("empty matrix has zero signature") {
  SeifertMatrix v;  // unknot-like
  CHECK(lt_signature(v, OmegaPoint(make_rational(1, 2))) == 0);
  CHECK(classical_signature(v) == 0);
}

TEST_CASE("crosscap lower bound") {
  // upsilon(1) = -1 and sigma/2 = -1 for the trefoil
  CHECK(crosscap_lower_bound(KnotExpr::parse("T(2,3)")) == 0);
  // T(3,7): upsilon(1) = -4, sigma = -8
  CHECK(crosscap_lower_bound(KnotExpr::parse("T(3,7)")) == 0);
  // mixed sum T(2,13) # -T(3,7): upsilon(1) = -6 + 4 = -2, sigma = -12 + 8 = -4
  CHECK(crosscap_lower_bound(KnotExpr::parse("T(2,13) # -T(3,7)")) == 0);
  // T(5,6): upsilon(1) = -6, sigma(T(5,6)) = -16
  CHECK(crosscap_lower_bound(KnotExpr::parse("T(5,6)")) ==
        rational_abs(make_rational(-6) - make_rational(classical_signature(torus_braid(5, 6)), 2)));
}
