#include "upscalc/interval.hpp"

namespace upscalc {

namespace {

void rational_to_mpfr(const Rational& s, mpfr_t out, mpfr_rnd_t rnd) {
  mpfr_set_q(out, s.get_mpq_t(), rnd);
}

}  // namespace

MPInterval MPInterval::one_minus_cos_pi(const Rational& s, mpfr_prec_t prec) {
  // pi*s in (0, pi]; cos decreasing there, so bounds swap through cos.
  MPInterval x(prec);
  mpfr_t pi_lo, pi_hi, a_lo, a_hi, t;
  mpfr_inits2(prec + 16, pi_lo, pi_hi, a_lo, a_hi, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  rational_to_mpfr(s, t, MPFR_RNDD);
  mpfr_mul(a_lo, pi_lo, t, MPFR_RNDD);
  rational_to_mpfr(s, t, MPFR_RNDU);
  mpfr_mul(a_hi, pi_hi, t, MPFR_RNDU);
  // cos([a_lo, a_hi]) = [cos(a_hi), cos(a_lo)]
  mpfr_cos(t, a_hi, MPFR_RNDD);
  mpfr_ui_sub(x.hi_, 1, t, MPFR_RNDU);
  mpfr_cos(t, a_lo, MPFR_RNDU);
  mpfr_ui_sub(x.lo_, 1, t, MPFR_RNDD);
  mpfr_clears(pi_lo, pi_hi, a_lo, a_hi, t, static_cast<mpfr_ptr>(nullptr));
  return x;
}

MPInterval MPInterval::sin_pi(const Rational& s, mpfr_prec_t prec) {
  // sin is not monotone on (0, pi); evaluate both endpoints and widen to
  // include 1 if the argument range brackets pi/2.
  MPInterval x(prec);
  mpfr_t pi_lo, pi_hi, a_lo, a_hi, s_lo, s_hi, half;
  mpfr_inits2(prec + 16, pi_lo, pi_hi, a_lo, a_hi, s_lo, s_hi, half,
              static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  rational_to_mpfr(s, s_lo, MPFR_RNDD);
  rational_to_mpfr(s, s_hi, MPFR_RNDU);
  mpfr_mul(a_lo, pi_lo, s_lo, MPFR_RNDD);
  mpfr_mul(a_hi, pi_hi, s_hi, MPFR_RNDU);
  mpfr_sin(s_lo, a_lo, MPFR_RNDN);
  mpfr_sin(s_hi, a_hi, MPFR_RNDN);
  if (mpfr_cmp(s_lo, s_hi) > 0) mpfr_swap(s_lo, s_hi);
  mpfr_set(x.lo_, s_lo, MPFR_RNDD);
  mpfr_set(x.hi_, s_hi, MPFR_RNDU);
  mpfr_nextbelow(x.lo_);
  mpfr_nextabove(x.hi_);
  // If pi/2 may lie inside [a_lo, a_hi], the max is 1.
  mpfr_div_ui(half, pi_hi, 2, MPFR_RNDU);
  if (mpfr_cmp(a_lo, half) <= 0) {
    mpfr_div_ui(half, pi_lo, 2, MPFR_RNDD);
    if (mpfr_cmp(a_hi, half) >= 0) mpfr_set_ui(x.hi_, 1, MPFR_RNDU);
  }
  mpfr_clears(pi_lo, pi_hi, a_lo, a_hi, s_lo, s_hi, half, static_cast<mpfr_ptr>(nullptr));
  return x;
}

MPInterval MPInterval::operator+(const MPInterval& o) const {
  MPInterval r(prec());
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

MPInterval MPInterval::operator-(const MPInterval& o) const {
  MPInterval r(prec());
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

MPInterval MPInterval::operator*(const MPInterval& o) const {
  MPInterval r(prec());
  mpfr_t c, best_lo, best_hi;
  mpfr_inits2(prec(), c, best_lo, best_hi, static_cast<mpfr_ptr>(nullptr));
  bool first = true;
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(c, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(c, best_lo) < 0) mpfr_set(best_lo, c, MPFR_RNDD);
      mpfr_mul(c, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(c, best_hi) > 0) mpfr_set(best_hi, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_, best_lo, MPFR_RNDD);
  mpfr_set(r.hi_, best_hi, MPFR_RNDU);
  mpfr_clears(c, best_lo, best_hi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

MPInterval MPInterval::operator/(const MPInterval& o) const {
  MPInterval r(prec());
  mpfr_t c, best_lo, best_hi;
  mpfr_inits2(prec(), c, best_lo, best_hi, static_cast<mpfr_ptr>(nullptr));
  bool first = true;
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(c, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(c, best_lo) < 0) mpfr_set(best_lo, c, MPFR_RNDD);
      mpfr_div(c, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(c, best_hi) > 0) mpfr_set(best_hi, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_, best_lo, MPFR_RNDD);
  mpfr_set(r.hi_, best_hi, MPFR_RNDU);
  mpfr_clears(c, best_lo, best_hi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

MPInterval MPInterval::operator-() const {
  MPInterval r(prec());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

template <class IV>
std::optional<Inertia> symmetric_inertia(std::vector<std::vector<IV>> m) {
  const size_t n = m.size();
  std::vector<size_t> active(n);
  for (size_t i = 0; i < n; ++i) active[i] = i;
  Inertia inertia;

  while (!active.empty()) {
    // Prefer the largest certified-nonzero diagonal pivot.
    size_t best = active.size();
    double best_mig = 0.0;
    for (size_t a = 0; a < active.size(); ++a) {
      const IV& d = m[active[a]][active[a]];
      if (!d.finite()) return std::nullopt;
      if (d.certified_sign() != 0 && d.mig() > best_mig) {
        best_mig = d.mig();
        best = a;
      }
    }
    if (best != active.size()) {
      size_t p = active[best];
      const IV piv = m[p][p];
      if (piv.certified_sign() > 0)
        ++inertia.positive;
      else
        ++inertia.negative;
      active.erase(active.begin() + static_cast<long>(best));
      for (size_t a = 0; a < active.size(); ++a)
        for (size_t b = a; b < active.size(); ++b) {
          size_t i = active[a], j = active[b];
          IV upd = m[i][j] - m[i][p] * m[j][p] / piv;
          m[i][j] = upd;
          m[j][i] = upd;
        }
      continue;
    }

    // No usable diagonal: take the largest certified off-diagonal and
    // eliminate a 2x2 block.
    size_t bp = 0, bq = 0;
    best_mig = 0.0;
    for (size_t a = 0; a < active.size(); ++a)
      for (size_t b = a + 1; b < active.size(); ++b) {
        const IV& o = m[active[a]][active[b]];
        if (!o.finite()) return std::nullopt;
        if (o.certified_sign() != 0 && o.mig() > best_mig) {
          best_mig = o.mig();
          bp = active[a];
          bq = active[b];
        }
      }
    if (best_mig == 0.0) return std::nullopt;  // nothing certifiable

    const IV a11 = m[bp][bp], a12 = m[bp][bq], a22 = m[bq][bq];
    const IV det = a11 * a22 - a12 * a12;
    int det_sign = det.certified_sign();
    if (det_sign == 0) return std::nullopt;
    if (det_sign < 0) {
      ++inertia.positive;
      ++inertia.negative;
    } else {
      int trace_sign = (a11 + a22).certified_sign();
      if (trace_sign == 0) return std::nullopt;
      if (trace_sign > 0)
        inertia.positive += 2;
      else
        inertia.negative += 2;
    }
    std::vector<size_t> rest;
    for (size_t idx : active)
      if (idx != bp && idx != bq) rest.push_back(idx);
    for (size_t a = 0; a < rest.size(); ++a)
      for (size_t b = a; b < rest.size(); ++b) {
        size_t i = rest[a], j = rest[b];
        // [vi] = [m[i][bp], m[i][bq]]; update = vi * inv(A) * vj^T
        IV xi = (a22 * m[i][bp] - a12 * m[i][bq]) / det;
        IV yi = (a11 * m[i][bq] - a12 * m[i][bp]) / det;
        IV upd = m[i][j] - (xi * m[j][bp] + yi * m[j][bq]);
        m[i][j] = upd;
        m[j][i] = upd;
      }
    active = std::move(rest);
  }
  return inertia;
}

template std::optional<Inertia> symmetric_inertia<DInterval>(
    std::vector<std::vector<DInterval>> m);
template std::optional<Inertia> symmetric_inertia<MPInterval>(
    std::vector<std::vector<MPInterval>> m);

Inertia symmetric_inertia_exact(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  std::vector<size_t> active(n);
  for (size_t i = 0; i < n; ++i) active[i] = i;
  Inertia inertia;

  while (!active.empty()) {
    size_t best = active.size();
    for (size_t a = 0; a < active.size(); ++a)
      if (m[active[a]][active[a]] != 0) {
        best = a;
        break;
      }
    if (best != active.size()) {
      size_t p = active[best];
      Rational piv = m[p][p];
      if (piv > 0)
        ++inertia.positive;
      else
        ++inertia.negative;
      active.erase(active.begin() + static_cast<long>(best));
      for (size_t a = 0; a < active.size(); ++a)
        for (size_t b = a; b < active.size(); ++b) {
          size_t i = active[a], j = active[b];
          Rational upd = m[i][j] - m[i][p] * m[j][p] / piv;
          m[i][j] = upd;
          m[j][i] = upd;
        }
      continue;
    }
    // Zero diagonal: use a 2x2 block with nonzero off-diagonal, if any.
    size_t bp = n, bq = n;
    for (size_t a = 0; a < active.size() && bp == n; ++a)
      for (size_t b = a + 1; b < active.size(); ++b)
        if (m[active[a]][active[b]] != 0) {
          bp = active[a];
          bq = active[b];
          break;
        }
    if (bp == n) {
      // Remaining block is identically zero.
      inertia.zero += static_cast<int>(active.size());
      return inertia;
    }
    Rational a12 = m[bp][bq];
    // Diagonal entries are zero here, so the block is [[0,a12],[a12,0]].
    ++inertia.positive;
    ++inertia.negative;
    Rational det = -a12 * a12;
    std::vector<size_t> rest;
    for (size_t idx : active)
      if (idx != bp && idx != bq) rest.push_back(idx);
    for (size_t a = 0; a < rest.size(); ++a)
      for (size_t b = a; b < rest.size(); ++b) {
        size_t i = rest[a], j = rest[b];
        Rational xi = (-a12 * m[i][bq]) / det;
        Rational yi = (-a12 * m[i][bp]) / det;
        Rational upd = m[i][j] - (xi * m[j][bp] + yi * m[j][bq]);
        m[i][j] = upd;
        m[j][i] = upd;
      }
    active = std::move(rest);
  }
  return inertia;
}

}  // namespace upscalc
