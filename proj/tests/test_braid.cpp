#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upscalc/braid.hpp"
#include "upscalc/errors.hpp"

using namespace upscalc;

TEST_CASE("parse infers strands and accepts separators") {
  BraidWord b = BraidWord::parse("1 1 1, 2 2,2 2 2 2 2");
  CHECK(b.strands() == 3);
  CHECK(b.length() == 10);
  CHECK(b.writhe() == 10);
  BraidWord c = BraidWord::parse("1 -2 1 -2", 3);
  CHECK(c.writhe() == 0);
  CHECK(BraidWord::parse("", 4).length() == 0);
  CHECK_THROWS_AS(BraidWord::parse("1 0 2"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("1 x"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("3", 2), std::invalid_argument);  // out of range
}

TEST_CASE("permutation and closure components") {
  BraidWord tref = torus_braid(2, 3);
  CHECK(tref.permutation() == std::vector<int>{1, 0});
  CHECK(tref.closure_components() == 1);
  CHECK_FALSE(tref.is_pure());

  // torus braid closes to a link with gcd(n,q) components
  CHECK(torus_braid(2, 4).closure_components() == 2);
  CHECK(torus_braid(4, 6).closure_components() == 2);
  CHECK(torus_braid(3, 7).closure_components() == 1);
  CHECK(full_twist(5).closure_components() == 5);
  CHECK(full_twist(5).is_pure());
}

TEST_CASE("group operations") {
  BraidWord a = BraidWord::parse("1 2", 3);
  BraidWord b = BraidWord::parse("-2 1", 3);
  CHECK(a.concat(b).length() == 4);
  CHECK(a.power(3) == a.concat(a).concat(a));
  CHECK(a.power(0) == BraidWord::identity(3));
  CHECK(a.inverse() == BraidWord::parse("-2 -1", 3));
  CHECK(a.mirror() == BraidWord::parse("-1 -2", 3));
  CHECK(a.concat(a.inverse()).free_reduced() == BraidWord::identity(3));
  CHECK(b.conjugate(a) == BraidWord::parse("1 2 -2 1 -2 -1", 3));
  CHECK(b.conjugate(a).free_reduced() == BraidWord::parse("1 1 -2 -1", 3));
  CHECK(b.conjugate(a).writhe() == b.writhe());
}

TEST_CASE("writhe is a homomorphism and conjugation-invariant") {
  BraidWord a = BraidWord::parse("1 -2 2 1 -1", 3);
  BraidWord w = BraidWord::parse("2 1 2", 3);
  CHECK(a.concat(w).writhe() == a.writhe() + w.writhe());
  CHECK(a.inverse().writhe() == -a.writhe());
  CHECK(a.conjugate(w).writhe() == a.writhe());
  CHECK(a.power(7).writhe() == 7 * a.writhe());
}

TEST_CASE("beta_n and K_n families") {
  BraidWord b2 = family_beta_n(2);
  CHECK(b2 == BraidWord::parse("1 1 2 2 1 1 2 2", 3));
  CHECK(b2.is_pure());
  // beta_n is pure, so beta_n^k stays pure
  for (int n = 1; n <= 5; ++n) {
    CHECK(family_beta_n(n).is_pure());
    CHECK(family_beta_n(n).power(3).is_pure());
    CHECK(family_K_n(n).closure_components() == 1);
  }
  CHECK(family_K_n(2) == BraidWord::parse("1 1 2 2 1 1 2 2 1 2", 3));
}

TEST_CASE("powers of any braid become pure at the permutation order") {
  for (int n = 2; n <= 5; ++n) {
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BraidWord b = torus_braid(n, 1).concat(BraidWord::parse("1", n));
    CHECK(b.power(fact).is_pure());
  }
}

TEST_CASE("quasipositive witness expansion and genus") {
  // a1 a1 a1 on two strands: three trivial bands, closure is the trefoil
  QuasipositiveWitness w;
  w.strands = 2;
  for (int i = 0; i < 3; ++i) w.bands.push_back({BraidWord::identity(2), 1});
  CHECK(w.expand() == torus_braid(2, 3));
  CHECK(w.rudolph_genus() == make_rational(1));

  // conjugated bands keep the writhe equal to the band count
  QuasipositiveWitness v;
  v.strands = 3;
  v.bands.push_back({BraidWord::parse("2 -1", 3), 1});
  v.bands.push_back({BraidWord::identity(3), 2});
  v.bands.push_back({BraidWord::identity(3), 2});
  v.bands.push_back({BraidWord::identity(3), 1});
  CHECK(v.expand().writhe() == 4);
  if (v.expand().closure_components() == 1)
    CHECK(v.rudolph_genus() == make_rational(4 - 3 + 1, 2));
}

TEST_CASE("constructor validates letters") {
  CHECK_THROWS_AS(BraidWord(2, {2}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
}
