#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "upscalc/braid.hpp"
#include "upscalc/errors.hpp"
#include "upscalc/polynomial.hpp"
#include "upscalc/seifert.hpp"

using namespace upscalc;

TEST_CASE("trefoil Seifert matrix in the brick basis") {
  SeifertMatrix v = seifert_matrix(torus_braid(2, 3));
  REQUIRE(v.size == 2);
  CHECK(v.entries[0][0] == -1);
  CHECK(v.entries[1][1] == -1);
  CHECK(v.entries[0][1] + v.entries[1][0] == 1);  // symmetrized linking
  CHECK(v.entries[0][1] * v.entries[1][0] == 0);
}

TEST_CASE("matrix size is c - n + 1") {
  CHECK(seifert_matrix(torus_braid(3, 4)).size == 6);
  CHECK(seifert_matrix(torus_braid(4, 5)).size == 12);
  CHECK(seifert_matrix(BraidWord(3, {1, -2, 1, -2})).size == 2);
  CHECK_THROWS_AS(seifert_matrix(torus_braid(2, 4)), std::invalid_argument);  // link
}

TEST_CASE("integer determinant by fraction-free elimination") {
  CHECK(integer_det({}) == 1);
  CHECK(integer_det({{Int(7)}}) == 7);
  CHECK(integer_det({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
  CHECK(integer_det({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);  // needs a row swap
  CHECK(integer_det({{Int(2), Int(4)}, {Int(1), Int(2)}}) == 0);
  CHECK(integer_det({{Int(2), Int(0), Int(1)},
                     {Int(1), Int(3), Int(2)},
                     {Int(0), Int(1), Int(4)}}) == 21);
}

TEST_CASE("Alexander polynomials of small knots") {
  CHECK(alexander_polynomial(seifert_matrix(torus_braid(2, 3))) ==
        Poly{Int(1), Int(-1), Int(1)});
  CHECK(alexander_polynomial(seifert_matrix(BraidWord(3, {1, -2, 1, -2}))) ==
        Poly{Int(1), Int(-3), Int(1)});
  CHECK(alexander_polynomial(seifert_matrix(torus_braid(2, 5))) ==
        Poly{Int(1), Int(-1), Int(1), Int(-1), Int(1)});
}

TEST_CASE("torus Alexander closed form") {
  CHECK(torus_alexander(2, 3) == Poly{Int(1), Int(-1), Int(1)});
  CHECK(torus_alexander(3, 4) ==
        Poly{Int(1), Int(-1), Int(0), Int(1), Int(0), Int(-1), Int(1)});
  // degree is (p-1)(q-1)
  CHECK(torus_alexander(5, 7).size() == 25);
}

TEST_CASE("alexander gate on sample torus braids") {
  for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}) {
    REQUIRE(std::gcd(p, q) == 1);
    CHECK(alexander_check(
        seifert_matrix(torus_braid(static_cast<int>(p), static_cast<int>(q))), p, q));
  }
}

TEST_CASE("omega order") {
  CHECK(omega_order(make_rational(1)) == 2);
  CHECK(omega_order(make_rational(1, 2)) == 4);
  CHECK(omega_order(make_rational(2, 3)) == 3);
  CHECK(omega_order(make_rational(3, 4)) == 8);
  CHECK(omega_order(make_rational(1, 5)) == 10);
  CHECK_THROWS_AS(omega_order(make_rational(0)), DomainError);
  CHECK_THROWS_AS(omega_order(make_rational(3, 2)), DomainError);
}

TEST_CASE("exact Alexander-root membership") {
  SeifertMatrix tref = seifert_matrix(torus_braid(2, 3));
  // roots of t^2 - t + 1 are the primitive 6th roots exp(+-i pi/3)
  CHECK(omega_is_alexander_root(tref, make_rational(1, 3)));
  CHECK_FALSE(omega_is_alexander_root(tref, make_rational(1, 2)));
  CHECK_FALSE(omega_is_alexander_root(tref, make_rational(1)));

  SeifertMatrix t25 = seifert_matrix(torus_braid(2, 5));
  // roots of t^4 - t^3 + t^2 - t + 1 are the primitive 10th roots
  CHECK(omega_is_alexander_root(t25, make_rational(1, 5)));
  CHECK(omega_is_alexander_root(t25, make_rational(3, 5)));
  CHECK_FALSE(omega_is_alexander_root(t25, make_rational(2, 5)));
  CHECK_FALSE(omega_is_alexander_root(t25, make_rational(1, 3)));
}

TEST_CASE("root membership matches the polynomial factorization") {
  // T(3,5): Alexander roots are the 15th roots of unity that are neither
  // cube roots nor fifth roots; s = 2k/15 for k coprime to 15.
  SeifertMatrix v = seifert_matrix(torus_braid(3, 5));
  CHECK(omega_is_alexander_root(v, make_rational(2, 15)));
  CHECK(omega_is_alexander_root(v, make_rational(14, 15)));
  CHECK_FALSE(omega_is_alexander_root(v, make_rational(2, 3)));   // cube root
  CHECK_FALSE(omega_is_alexander_root(v, make_rational(2, 5)));   // fifth root
  CHECK_FALSE(omega_is_alexander_root(v, make_rational(1)));
}
