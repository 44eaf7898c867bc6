#include "upscalc/seifert.hpp"

#include <algorithm>
#include <numeric>

#include "upscalc/errors.hpp"

namespace upscalc {

namespace {

// Local linking rules for the brick basis, one loop per pair of
// consecutive bands in the same column.  Loops are oriented to run down
// the right disk.  The table below is frozen against the validation
// suite (alexander_check on torus braids, sign fixed by sigma(T(2,3)) = -2):
//
//   self pairing, bands of signs e1 (upper), e2 (lower):    -(e1 + e2)/2
//   consecutive loops in one column, shared band of sign e:
//       V[upper][lower] = (e + 1)/2,  V[lower][upper] = (e - 1)/2
//   loops in adjacent columns i, i+1 spanning positions [a,b] and [c,d]:
//       a < c < b < d:  V[left][right] = 0,  V[right][left] = -1
//       c < a < d < b:  V[left][right] = 0,  V[right][left] = 1
//   all other pairs: 0
constexpr long kInterleaveLR_A = 0, kInterleaveRL_A = -1;
constexpr long kInterleaveLR_B = 0, kInterleaveRL_B = 1;

struct Loop {
  int column;    // 1..n-1
  long top;      // word position of upper band
  long bottom;   // word position of lower band
  int top_sign;
  int bottom_sign;
};

}  // namespace

SeifertMatrix seifert_matrix(const BraidWord& b) {
  if (b.closure_components() != 1)
    throw std::invalid_argument("seifert_matrix: closure is not a knot");

  const int n = b.strands();
  std::vector<std::vector<std::pair<long, int>>> cols(static_cast<size_t>(n));
  const auto& letters = b.letters();
  for (size_t pos = 0; pos < letters.size(); ++pos) {
    int l = letters[pos];
    cols[static_cast<size_t>(std::abs(l))].emplace_back(static_cast<long>(pos),
                                                        l > 0 ? 1 : -1);
  }

  std::vector<Loop> loops;
  for (int i = 1; i < n; ++i) {
    const auto& col = cols[static_cast<size_t>(i)];
    for (size_t k = 0; k + 1 < col.size(); ++k)
      loops.push_back({i, col[k].first, col[k + 1].first, col[k].second, col[k + 1].second});
  }

  const int size = static_cast<int>(loops.size());
  SeifertMatrix out;
  out.size = size;
  out.source = b.to_string();
  out.entries.assign(static_cast<size_t>(size), std::vector<long>(static_cast<size_t>(size), 0));

  for (int x = 0; x < size; ++x) {
    const Loop& g = loops[static_cast<size_t>(x)];
    out.entries[x][x] = -(g.top_sign + g.bottom_sign) / 2;
    for (int y = x + 1; y < size; ++y) {
      const Loop& d = loops[static_cast<size_t>(y)];
      if (g.column == d.column) {
        // Columns are emitted top to bottom, so g is above d.
        if (g.bottom == d.top) {
          int e = g.bottom_sign;
          out.entries[x][y] = (e + 1) / 2;
          out.entries[y][x] = (e - 1) / 2;
        }
        continue;
      }
      if (std::abs(g.column - d.column) != 1) continue;
      const Loop& left = (g.column < d.column) ? g : d;
      const Loop& right = (g.column < d.column) ? d : g;
      long lr = 0, rl = 0;
      if (left.top < right.top && right.top < left.bottom && left.bottom < right.bottom) {
        lr = kInterleaveLR_A;
        rl = kInterleaveRL_A;
      } else if (right.top < left.top && left.top < right.bottom &&
                 right.bottom < left.bottom) {
        lr = kInterleaveLR_B;
        rl = kInterleaveRL_B;
      } else {
        continue;
      }
      if (g.column < d.column) {
        out.entries[x][y] = lr;
        out.entries[y][x] = rl;
      } else {
        out.entries[x][y] = rl;
        out.entries[y][x] = lr;
      }
    }
  }
  return out;
}

Int integer_det(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

namespace {

std::vector<std::vector<Int>> form_v_minus_t_vt(const SeifertMatrix& v, const Int& t) {
  size_t n = static_cast<size_t>(v.size);
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = Int(v.entries[i][j]) - t * Int(v.entries[j][i]);
  return m;
}

}  // namespace

Poly alexander_polynomial(const SeifertMatrix& v) {
  const long d = v.size;
  if (d == 0) return {Int(1)};
  // det(V - t V^T) has degree <= d; interpolate from d+1 integer samples.
  std::vector<Int> xs, ys;
  for (long j = 0; j <= d; ++j) {
    Int x(j - d / 2);
    xs.push_back(x);
    ys.push_back(integer_det(form_v_minus_t_vt(v, x)));
  }
  // Newton divided differences, then expansion to monomial form.
  size_t m = xs.size();
  std::vector<Rational> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = make_rational(ys[i]);
  for (size_t level = 1; level < m; ++level)
    for (size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / make_rational(xs[i] - xs[i - level]);
  std::vector<Rational> coeffs{dd[m - 1]};
  for (size_t i = m - 1; i-- > 0;) {
    // coeffs = coeffs * (x - xs[i]) + dd[i]
    coeffs.insert(coeffs.begin(), make_rational(0));
    Rational xi = make_rational(xs[i]);
    for (size_t j = 0; j + 1 < coeffs.size(); ++j) coeffs[j] -= xi * coeffs[j + 1];
    coeffs[0] += dd[i];
  }
  Poly p;
  for (auto& c : coeffs) {
    if (c.get_den() != 1) throw ValidationError("interpolated determinant is not integral");
    p.push_back(c.get_num());
  }
  return poly_normalize_units(std::move(p));
}

Poly torus_alexander(long p, long q) {
  Poly num = poly_mul(poly_xn_minus_1(p * q), poly_xn_minus_1(1));
  Poly den = poly_mul(poly_xn_minus_1(p), poly_xn_minus_1(q));
  return poly_normalize_units(poly_div_exact(num, den));
}

bool alexander_check(const SeifertMatrix& v, long p, long q) {
  return alexander_polynomial(v) == torus_alexander(p, q);
}

long omega_order(const Rational& s) {
  if (s <= 0 || s > 1) throw DomainError("omega parameter s must be in (0, 1]");
  Int a = s.get_num(), b = s.get_den();
  // omega = exp(i pi a/b) has order 2b / gcd(a, 2).
  return mpz_even_p(a.get_mpz_t()) ? b.get_si() : 2 * b.get_si();
}

// --- determinant over Z[zeta_m] -------------------------------------------

namespace {

using RPoly = std::vector<Rational>;  // rational polynomial, ascending degree

RPoly rp_trim(RPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// r = r - q * b with q = quotient; returns quotient via divmod.
RPoly rp_divmod(RPoly& r, const RPoly& b) {
  RPoly q;
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, make_rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rational c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r = rp_trim(std::move(r));
  }
  return q;
}

struct RingDivisor {
  Poly w;  // integer polynomial with pivot * w == d (mod Phi)
  Int d;
};

// Inverse of piv in Q[x]/Phi, cleared to integers.
RingDivisor ring_inverse(const Poly& piv, const Poly& phi) {
  RPoly r0, r1, t0, t1;
  for (auto& c : phi) r0.push_back(make_rational(c));
  for (auto& c : piv) r1.push_back(make_rational(c));
  r0 = rp_trim(std::move(r0));
  r1 = rp_trim(std::move(r1));
  t0 = {};
  t1 = {make_rational(1)};
  while (!r1.empty()) {
    RPoly rem = r0;
    RPoly q = rp_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    // t_new = t0 - q * t1
    RPoly qt(q.size() + t1.size(), make_rational(0));
    if (!t1.empty() && !q.empty())
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
    RPoly tn(std::max(t0.size(), qt.size()), make_rational(0));
    for (size_t i = 0; i < t0.size(); ++i) tn[i] += t0[i];
    for (size_t i = 0; i < qt.size(); ++i) tn[i] -= qt[i];
    t0 = std::move(t1);
    t1 = rp_trim(std::move(tn));
  }
  if (r0.size() != 1) throw ValidationError("pivot not invertible modulo Phi");
  // piv * t0 == r0[0] (mod Phi); clear denominators.
  Int lcm(1);
  for (auto& c : t0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Rational scaled_c = r0[0] * make_rational(lcm);
  Int dd = scaled_c.get_den();
  RingDivisor out;
  out.d = scaled_c.get_num();
  for (auto& c : t0) {
    Rational w = c * make_rational(lcm) * make_rational(dd);
    if (w.get_den() != 1) throw ValidationError("ring inverse clearing failed");
    out.w.push_back(w.get_num());
  }
  out.w = poly_trim(std::move(out.w));
  return out;
}

Poly ring_mul(const Poly& a, const Poly& b, const Poly& phi) {
  return poly_mod(poly_mul(a, b), phi);
}

}  // namespace

bool omega_is_alexander_root(const SeifertMatrix& v, const Rational& s) {
  const size_t n = static_cast<size_t>(v.size);
  if (n == 0) return false;
  const long m = omega_order(s);
  const Poly phi = cyclotomic(m);
  // conj(omega) = omega^{m-1}
  Poly conj(static_cast<size_t>(m), Int(0));
  conj[static_cast<size_t>(m - 1)] = 1;
  conj = poly_mod(conj, phi);

  // W = V - conj(omega) V^T over Z[zeta_m].
  std::vector<std::vector<Poly>> w(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly cell;
      if (v.entries[i][j] != 0) cell = Poly{Int(v.entries[i][j])};
      if (v.entries[j][i] != 0) {
        Poly sub = conj;
        for (auto& c : sub) c *= Int(v.entries[j][i]);
        cell = poly_sub(cell, sub);
      }
      w[i][j] = std::move(cell);
    }

  // Fraction-free elimination; a zero determinant means omega is a root.
  RingDivisor prev{Poly{Int(1)}, Int(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (poly_is_zero(w[k][k])) {
      size_t swap_row = k + 1;
      while (swap_row < n && poly_is_zero(w[swap_row][k])) ++swap_row;
      if (swap_row == n) {
        // Check remaining columns: a fully zero column certifies singularity.
        bool all_zero = true;
        for (size_t i = k; i < n && all_zero; ++i)
          if (!poly_is_zero(w[i][k])) all_zero = false;
        if (all_zero) return true;
        continue;  // unreachable; defensive
      }
      std::swap(w[k], w[swap_row]);
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = poly_sub(ring_mul(w[i][j], w[k][k], phi), ring_mul(w[i][k], w[k][j], phi));
        // divide by previous pivot
        Poly t = ring_mul(num, prev.w, phi);
        for (auto& c : t) {
          Int q, r;
          mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), prev.d.get_mpz_t());
          if (r != 0) throw ValidationError("inexact Bareiss division over Z[zeta]");
          c = q;
        }
        w[i][j] = poly_trim(std::move(t));
      }
    prev = ring_inverse(w[k][k], phi);
  }
  return poly_is_zero(w[n - 1][n - 1]);
}

}  // namespace upscalc
