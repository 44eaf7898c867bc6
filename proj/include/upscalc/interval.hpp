#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "upscalc/rational.hpp"

namespace upscalc {

// Double interval with outward rounding by ulp nudging.  Fast first tier
// of the precision-escalation ladder.
struct DInterval {
  double lo = 0.0;
  double hi = 0.0;

  static DInterval exact(double v) { return {v, v}; }
  static DInterval from_long(long v) {
    double d = static_cast<double>(v);
    if (static_cast<long>(d) == v && std::abs(v) < (1L << 52)) return {d, d};
    return {std::nextafter(d, -1e308), std::nextafter(d, 1e308)};
  }

  DInterval operator+(const DInterval& o) const {
    return {std::nextafter(lo + o.lo, -1e308), std::nextafter(hi + o.hi, 1e308)};
  }
  DInterval operator-(const DInterval& o) const {
    return {std::nextafter(lo - o.hi, -1e308), std::nextafter(hi - o.lo, 1e308)};
  }
  DInterval operator*(const DInterval& o) const {
    double c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    double l = *std::min_element(c, c + 4), h = *std::max_element(c, c + 4);
    return {std::nextafter(l, -1e308), std::nextafter(h, 1e308)};
  }
  // Requires the divisor to exclude zero.
  DInterval operator/(const DInterval& o) const {
    double c[4] = {lo / o.lo, lo / o.hi, hi / o.lo, hi / o.hi};
    double l = *std::min_element(c, c + 4), h = *std::max_element(c, c + 4);
    return {std::nextafter(l, -1e308), std::nextafter(h, 1e308)};
  }
  DInterval operator-() const { return {-hi, -lo}; }

  // -1, +1, or 0 when the enclosure straddles zero.
  int certified_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }
  double mig() const {  // min |x| over the interval, 0 if it contains 0
    if (lo > 0) return lo;
    if (hi < 0) return -hi;
    return 0.0;
  }
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

// Interval with MPFR endpoints at a fixed working precision.
class MPInterval {
 public:
  MPInterval() { init(53); }
  explicit MPInterval(mpfr_prec_t prec) { init(prec); }
  MPInterval(const MPInterval& o) {
    init(mpfr_get_prec(o.lo_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  MPInterval(MPInterval&& o) noexcept {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    o.moved_ = true;
  }
  MPInterval& operator=(MPInterval o) {
    std::swap(lo_[0], o.lo_[0]);
    std::swap(hi_[0], o.hi_[0]);
    std::swap(moved_, o.moved_);
    return *this;
  }
  ~MPInterval() {
    if (!moved_) {
      mpfr_clear(lo_);
      mpfr_clear(hi_);
    }
  }

  static MPInterval from_long(long v, mpfr_prec_t prec) {
    MPInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  // Enclosures of 1 - cos(pi s) and sin(pi s) for rational s.
  static MPInterval one_minus_cos_pi(const Rational& s, mpfr_prec_t prec);
  static MPInterval sin_pi(const Rational& s, mpfr_prec_t prec);

  MPInterval operator+(const MPInterval& o) const;
  MPInterval operator-(const MPInterval& o) const;
  MPInterval operator*(const MPInterval& o) const;
  MPInterval operator/(const MPInterval& o) const;
  MPInterval operator-() const;

  int certified_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }
  double mig() const {
    if (mpfr_sgn(lo_) > 0) return mpfr_get_d(lo_, MPFR_RNDD);
    if (mpfr_sgn(hi_) < 0) return -mpfr_get_d(hi_, MPFR_RNDU);
    return 0.0;
  }
  bool finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  bool moved_ = false;

  void init(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;  // only reported by the exact backend
  int signature() const { return positive - negative; }
};

// Certified inertia of a symmetric matrix given by enclosures, via
// symmetric elimination with 1x1 and 2x2 pivots.  Returns nullopt when a
// pivot sign cannot be certified at this precision.
template <class IV>
std::optional<Inertia> symmetric_inertia(std::vector<std::vector<IV>> m);

// Exact inertia of a rational symmetric matrix (zero counts reported).
Inertia symmetric_inertia_exact(std::vector<std::vector<Rational>> m);

}  // namespace upscalc
