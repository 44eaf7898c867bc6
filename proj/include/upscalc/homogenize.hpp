#pragma once

#include <vector>

#include "upscalc/braid.hpp"
#include "upscalc/plfunction.hpp"

namespace upscalc {

enum class HomFamily { GenericSmallT, TorusBraid, BetaN };

struct HomogenizedProfile {
  HomFamily family;
  PLFunction profile;  // on [0,2]
};

// Homogenized Upsilon of an n-braid at t <= 2/n: -t l(beta)/2; this also
// equals half the homogenized signature there.
Rational hom_ups_small_t(const BraidWord& b, const Rational& t);

// (m/n) * staircase(n) for the n-braid (a_1...a_{n-1})^m; negative m
// mirrors the profile.
HomogenizedProfile hom_ups_torus_braid(long n, long m);

// Two-piece profile of the 3-braid (a_1^2 a_2^2)^n: -2tn on [0,2/3],
// -2n + tn on [2/3,1], symmetrized.  Non-convex for every n >= 1.
HomogenizedProfile hom_ups_beta_n(long n);

// Sandwich bounds for Upsilon of K_n (closure of beta_n a_1 a_2):
// Y_{T(3,3n+1)}(t) - Y_{T(2,2n+1)}(t) -/+ (1 - |1 - t|).
std::pair<Rational, Rational> kn_sandwich(long n, const Rational& t);

// Homogenized Levine-Tristram signature on the torus braid family:
// (2m/n)(-(i+1)i - n(n-1-2i)t/2) with i = floor(n t / 2), t in [0, 1].
Rational hom_sig_torus_braid(long n, long m, const Rational& t);

// Gap between homogenized and exact Upsilon on the torus braid of
// T(n,q); must be <= t(n-1)/2.  Throws ValidationError when violated.
Rational defect_gap_check(long n, long q, const Rational& t);

// sigma_{e^{i pi t}}(T(n, nk+1))/k for k = 1..kmax, each asserted within
// 4n/k of hom_sig_torus_braid(n, n, t).  Jump points are skipped and the
// corresponding slot left unset.
struct ConvergenceSample {
  long k;
  bool jump = false;
  Rational scaled_sigma;  // sigma / k when not a jump
};

std::vector<ConvergenceSample> sigma_convergence_check(long n, const Rational& t, long kmax);

}  // namespace upscalc
