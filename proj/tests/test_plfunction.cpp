#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upscalc/errors.hpp"
#include "upscalc/plfunction.hpp"

using namespace upscalc;

namespace {
PLFunction::Breakpoint bp(long tn, long td, long vn, long vd = 1) {
  return {make_rational(tn, td), make_rational(vn, vd)};
}
}  // namespace

TEST_CASE("default function is zero on [0,2]") {
  PLFunction f;
  CHECK(f.domain_end() == 2);
  CHECK(f.eval(make_rational(1)) == 0);
  CHECK(f.breakpoints().size() == 2);
}

TEST_CASE("constructor canonicalizes collinear points") {
  PLFunction f({bp(0, 1, 0), bp(1, 2, -1), bp(1, 1, -2), bp(2, 1, -2)});
  CHECK(f.breakpoints().size() == 3);  // the midpoint at 1/2 is collinear
  CHECK(f.eval(make_rational(1, 2)) == make_rational(-1));
}

TEST_CASE("constructor rejects bad breakpoint lists") {
  CHECK_THROWS_AS(PLFunction({bp(1, 2, 0), bp(1, 1, 1)}), DomainError);        // no t=0
  CHECK_THROWS_AS(PLFunction({bp(0, 1, 0), bp(0, 1, 1)}), DomainError);        // repeated t
  CHECK_THROWS_AS(PLFunction(std::vector<PLFunction::Breakpoint>{bp(0, 1, 0)}), DomainError);
  CHECK_THROWS_AS(PLFunction(make_rational(-1)), DomainError);
}

TEST_CASE("eval interpolates exactly") {
  PLFunction f({bp(0, 1, 0), bp(2, 3, -2), bp(2, 1, 0)});
  CHECK(f.eval(make_rational(1, 3)) == make_rational(-1));
  CHECK(f.eval(make_rational(2, 3)) == make_rational(-2));
  CHECK(f.eval(make_rational(1)) == make_rational(-3, 2));
  CHECK(f.eval(make_rational(2)) == 0);
  CHECK_THROWS_AS(f.eval(make_rational(-1, 7)), DomainError);
  CHECK_THROWS_AS(f.eval(make_rational(3)), DomainError);
}

TEST_CASE("add merges grids and stays exact") {
  PLFunction a({bp(0, 1, 0), bp(1, 1, -1), bp(2, 1, 0)});
  PLFunction b({bp(0, 1, 0), bp(1, 2, -1), bp(2, 1, 1)});
  PLFunction s = a.add(b);
  CHECK(s.eval(make_rational(1, 2)) == make_rational(-3, 2));
  CHECK(s.eval(make_rational(1)) == make_rational(-1, 3) + make_rational(-1) -
                                        make_rational(-1, 3) + make_rational(-1, 3));
  // direct check instead of the expression above:
  CHECK(s.eval(make_rational(1)) == a.eval(make_rational(1)) + b.eval(make_rational(1)));
  CHECK((a + b) == s);
}

TEST_CASE("scale and negate") {
  PLFunction a({bp(0, 1, 0), bp(1, 1, -1), bp(2, 1, 0)});
  CHECK(a.scale(make_rational(3)).eval(make_rational(1)) == make_rational(-3));
  CHECK(a.scale(make_rational(0)) == PLFunction());
  CHECK((-a).eval(make_rational(1)) == make_rational(1));
  CHECK(a.add(-a) == PLFunction());
}

TEST_CASE("symmetrize reflects [0,1] onto [0,2]") {
  PLFunction half({bp(0, 1, 0), bp(1, 1, -2)});
  PLFunction f = half.symmetrize();
  CHECK(f.domain_end() == 2);
  CHECK(f.eval(make_rational(1, 2)) == make_rational(-1));
  CHECK(f.eval(make_rational(3, 2)) == make_rational(-1));
  CHECK(f.eval(make_rational(2)) == 0);
  CHECK_THROWS_AS(f.symmetrize(), DomainError);  // already on [0,2]
}

TEST_CASE("is_convex tracks slope monotonicity") {
  CHECK(PLFunction({bp(0, 1, 0), bp(1, 1, -1), bp(2, 1, 0)}).is_convex());
  CHECK_FALSE(PLFunction({bp(0, 1, 0), bp(1, 1, 1), bp(2, 1, 0)}).is_convex());
  CHECK(PLFunction().is_convex());
}

TEST_CASE("pointwise_min finds the crossing breakpoint") {
  PLFunction a({bp(0, 1, 0), bp(2, 1, -2)});  // slope -1
  PLFunction b({bp(0, 1, -1), bp(2, 1, -1)});  // constant -1... needs t=0 value -1
  PLFunction m = a.pointwise_min(b);
  CHECK(m.eval(make_rational(0)) == make_rational(-1));
  CHECK(m.eval(make_rational(1)) == make_rational(-1));
  CHECK(m.eval(make_rational(2)) == make_rational(-2));
  // crossing at t = 1 must be an exact breakpoint
  bool found = false;
  for (const auto& p : m.breakpoints()) found |= (p.t == 1);
  CHECK(found);
}

TEST_CASE("upper_envelope of a fan of lines") {
  std::vector<Line> lines{{make_rational(-2), make_rational(0)},
                          {make_rational(-1), make_rational(-1, 2)},
                          {make_rational(0), make_rational(-2)}};
  PLFunction f = PLFunction::upper_envelope(lines, make_rational(2));
  CHECK(f.eval(make_rational(0)) == 0);
  CHECK(f.eval(make_rational(1, 2)) == make_rational(-1));
  CHECK(f.eval(make_rational(2)) == make_rational(-2));
  CHECK(f.is_convex());
}

TEST_CASE("upper_envelope keeps the larger intercept on slope ties") {
  std::vector<Line> lines{{make_rational(1), make_rational(0)},
                          {make_rational(1), make_rational(-5)},
                          {make_rational(2), make_rational(-3)}};
  PLFunction f = PLFunction::upper_envelope(lines, make_rational(4));
  CHECK(f.eval(make_rational(0)) == 0);
  CHECK(f.eval(make_rational(4)) == make_rational(5));
  CHECK_THROWS_AS(PLFunction::upper_envelope({}, make_rational(1)), std::invalid_argument);
}

TEST_CASE("upper_envelope ignores lines dominated before t = 0") {
  std::vector<Line> lines{{make_rational(-10), make_rational(1)},
                          {make_rational(0), make_rational(0)}};
  PLFunction f = PLFunction::upper_envelope(lines, make_rational(1));
  CHECK(f.eval(make_rational(0)) == 1);
  CHECK(f.eval(make_rational(1)) == 0);
}
