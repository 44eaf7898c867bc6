#pragma once

#include <string>
#include <vector>

#include "upscalc/seifert.hpp"
#include "upscalc/upsilon.hpp"

namespace upscalc {

// omega = exp(i pi s); s = 1 is the classical signature omega = -1.
struct OmegaPoint {
  Rational s;

  explicit OmegaPoint(Rational value);
  bool is_classical() const { return s == 1; }
};

// Signature of the Hermitian form (1-omega) V + (1-conj(omega)) V^T.
// Certified: interval arithmetic with precision escalation; throws
// JumpPointError at Alexander roots and UndecidableError at the
// escalation cap.  The classical point s = 1 is evaluated exactly.
int lt_signature(const SeifertMatrix& v, const OmegaPoint& w);

int classical_signature(const SeifertMatrix& v);
int classical_signature(const BraidWord& b);
// Additive over summands, sign flipped under mirror.
int classical_signature(const KnotExpr& e);

// |upsilon(e) - sigma(e)/2|: lower bound for the smooth 4-dimensional
// crosscap number.
Rational crosscap_lower_bound(const KnotExpr& e);

// One row of a signature sweep; jump marks an Alexander root.
struct SweepPoint {
  Rational s;
  int sigma = 0;
  bool jump = false;
};

std::vector<SweepPoint> signature_sweep(const SeifertMatrix& v, long k);

}  // namespace upscalc
