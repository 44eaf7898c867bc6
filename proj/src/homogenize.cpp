#include "upscalc/homogenize.hpp"

#include <numeric>

#include "upscalc/errors.hpp"
#include "upscalc/signature.hpp"
#include "upscalc/upsilon.hpp"

namespace upscalc {

Rational hom_ups_small_t(const BraidWord& b, const Rational& t) {
  if (t <= 0 || t > make_rational(2, b.strands()))
    throw DomainError("t outside the validity window (0, 2/n]");
  return -t * make_rational(b.writhe(), 2);
}

HomogenizedProfile hom_ups_torus_braid(long n, long m) {
  if (n < 2) throw std::invalid_argument("hom_ups_torus_braid expects n >= 2");
  return {HomFamily::TorusBraid, ups_staircase(n).scale(make_rational(m, n))};
}

HomogenizedProfile hom_ups_beta_n(long n) {
  if (n < 1) throw std::invalid_argument("hom_ups_beta_n expects n >= 1");
  std::vector<PLFunction::Breakpoint> pts{
      {make_rational(0), make_rational(0)},
      {make_rational(2, 3), make_rational(-4 * n, 3)},
      {make_rational(1), make_rational(-n)},
  };
  return {HomFamily::BetaN, PLFunction(std::move(pts)).symmetrize()};
}

std::pair<Rational, Rational> kn_sandwich(long n, const Rational& t) {
  if (n < 1) throw std::invalid_argument("kn_sandwich expects n >= 1");
  Rational base = ups_torus_euclid(3, 3 * n + 1).eval(t) - ups_torus_euclid(2, 2 * n + 1).eval(t);
  Rational one = make_rational(1);
  Rational bump = one - rational_abs(one - t);
  return {base - bump, base + bump};
}

Rational hom_sig_torus_braid(long n, long m, const Rational& t) {
  if (n < 2) throw std::invalid_argument("hom_sig_torus_braid expects n >= 2");
  if (t < 0 || t > 1) throw DomainError("t must lie in [0, 1]");
  Rational x = make_rational(n) * t / 2;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  long i = fl.get_si();
  if (i >= n) i = n - 1;  // only reachable at the right endpoint
  Rational inner = make_rational(-(i + 1) * i) - make_rational(n * (n - 1 - 2 * i), 2) * t;
  return make_rational(2 * m, n) * inner;
}

Rational defect_gap_check(long n, long q, const Rational& t) {
  if (std::gcd(n, q) != 1) throw std::invalid_argument("defect_gap_check expects coprime n, q");
  Rational gap = hom_ups_torus_braid(n, q).profile.eval(t) - ups_torus_euclid(n, q).eval(t);
  if (gap > t * make_rational(n - 1, 2))
    throw ValidationError("homogenization defect bound violated for T(" + std::to_string(n) +
                          "," + std::to_string(q) + ")");
  return gap;
}

std::vector<ConvergenceSample> sigma_convergence_check(long n, const Rational& t, long kmax) {
  Rational target = hom_sig_torus_braid(n, n, t);
  std::vector<ConvergenceSample> out;
  for (long k = 1; k <= kmax; ++k) {
    ConvergenceSample sample;
    sample.k = k;
    SeifertMatrix v =
        seifert_matrix(torus_braid(static_cast<int>(n), static_cast<int>(n * k + 1)));
    try {
      int sigma = lt_signature(v, OmegaPoint(t));
      sample.scaled_sigma = make_rational(sigma, k);
      if (rational_abs(sample.scaled_sigma - target) > make_rational(4 * n, k))
        throw ValidationError("sigma homogenization convergence allowance exceeded at k = " +
                              std::to_string(k));
    } catch (const JumpPointError&) {
      sample.jump = true;
    }
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace upscalc
