#include "upscalc/signature.hpp"

#include <cmath>

#include "upscalc/errors.hpp"
#include "upscalc/interval.hpp"

namespace upscalc {

OmegaPoint::OmegaPoint(Rational value) : s(std::move(value)) {
  if (s <= 0 || s > 1) throw DomainError("omega parameter s must lie in (0, 1]");
}

namespace {

// Real symmetric embedding [[R, -I], [I, R]] of the Hermitian form
// (1-omega)V + (1-conj(omega))V^T = (1-cos pi s)(V+V^T) + i sin(pi s)(V^T-V);
// its signature is twice the Hermitian one.
template <class IV, class MakeScalar>
std::vector<std::vector<IV>> real_embedding(const SeifertMatrix& v, const IV& one_minus_c,
                                            const IV& sn, MakeScalar from_long) {
  const size_t d = static_cast<size_t>(v.size);
  std::vector<std::vector<IV>> b(2 * d, std::vector<IV>(2 * d, from_long(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      long sym = v.entries[i][j] + v.entries[j][i];
      long skew = v.entries[j][i] - v.entries[i][j];
      IV re = one_minus_c * from_long(sym);
      IV im = sn * from_long(skew);
      b[i][j] = re;
      b[d + i][d + j] = re;
      b[i][d + j] = -im;
      b[d + i][j] = im;
    }
  return b;
}

constexpr mpfr_prec_t kPrecLadder[] = {128, 256, 512, 1024};

}  // namespace

int classical_signature(const SeifertMatrix& v) {
  if (v.size == 0) return 0;
  const size_t d = static_cast<size_t>(v.size);
  std::vector<std::vector<Rational>> s(d, std::vector<Rational>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      s[i][j] = make_rational(v.entries[i][j] + v.entries[j][i]);
  Inertia inertia = symmetric_inertia_exact(std::move(s));
  if (inertia.zero > 0)
    throw JumpPointError("V + V^T is singular; omega = -1 is an Alexander root");
  return inertia.signature();
}

int classical_signature(const BraidWord& b) { return classical_signature(seifert_matrix(b)); }

int classical_signature(const KnotExpr& e) {
  int acc = 0;
  for (const auto& [spec, mult] : e.summands) {
    if (spec.is_unknot()) continue;
    int s = classical_signature(torus_braid(static_cast<int>(spec.p),
                                            static_cast<int>(spec.q)));
    acc += static_cast<int>(mult) * (spec.mirrored ? -s : s);
  }
  return acc;
}

int lt_signature(const SeifertMatrix& v, const OmegaPoint& w) {
  if (v.size == 0) return 0;
  if (w.is_classical()) return classical_signature(v);

  // Tier 0: double intervals.
  {
    double pi = 3.14159265358979323846;
    double arg = pi * w.s.get_d();
    double c = std::cos(arg), sn = std::sin(arg);
    auto widen = [](double x) {
      DInterval iv{x, x};
      for (int k = 0; k < 8; ++k) {
        iv.lo = std::nextafter(iv.lo, -1e308);
        iv.hi = std::nextafter(iv.hi, 1e308);
      }
      return iv;
    };
    DInterval omc = DInterval::exact(1.0) - widen(c);
    DInterval sni = widen(sn);
    auto b = real_embedding<DInterval>(v, omc, sni, &DInterval::from_long);
    if (auto inertia = symmetric_inertia(std::move(b))) {
      int sig2 = inertia->signature();
      return sig2 / 2;
    }
  }

  // Exact jump detection before spending high precision.
  if (omega_is_alexander_root(v, w.s))
    throw JumpPointError("omega = exp(i pi " + to_string(w.s) +
                         ") is a root of the Alexander polynomial");

  for (mpfr_prec_t prec : kPrecLadder) {
    MPInterval omc = MPInterval::one_minus_cos_pi(w.s, prec);
    MPInterval sni = MPInterval::sin_pi(w.s, prec);
    auto from_long = [prec](long x) { return MPInterval::from_long(x, prec); };
    auto b = real_embedding<MPInterval>(v, omc, sni, from_long);
    if (auto inertia = symmetric_inertia(std::move(b))) return inertia->signature() / 2;
  }
  throw UndecidableError("signature at s = " + to_string(w.s) +
                         " not certified within the precision cap");
}

Rational crosscap_lower_bound(const KnotExpr& e) {
  Rational upsilon_1 = ups_expr(e).eval(make_rational(1));
  Rational half_sigma = make_rational(classical_signature(e), 2);
  return rational_abs(upsilon_1 - half_sigma);
}

std::vector<SweepPoint> signature_sweep(const SeifertMatrix& v, long k) {
  if (k < 2) throw std::invalid_argument("sweep expects k >= 2");
  std::vector<SweepPoint> out;
  for (long j = 1; j < k; ++j) {
    SweepPoint pt;
    pt.s = make_rational(j, k);
    try {
      pt.sigma = lt_signature(v, OmegaPoint(pt.s));
    } catch (const JumpPointError&) {
      pt.jump = true;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace upscalc
