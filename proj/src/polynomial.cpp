#include "upscalc/polynomial.hpp"

#include <algorithm>

#include "upscalc/errors.hpp"

namespace upscalc {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool poly_is_zero(const Poly& p) { return poly_trim(p).empty(); }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly rem = poly_trim(a);
  Poly bb = poly_trim(b);
  if (bb.empty()) throw ValidationError("division by zero polynomial");
  if (rem.empty()) return {};
  if (rem.size() < bb.size()) throw ValidationError("inexact polynomial division");
  Poly q(rem.size() - bb.size() + 1, Int(0));
  for (size_t k = q.size(); k-- > 0;) {
    Int c = rem[k + bb.size() - 1];
    if (c == 0) continue;
    Int qk;
    Int r;
    mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), bb.back().get_mpz_t());
    if (r != 0) throw ValidationError("inexact polynomial division");
    q[k] = qk;
    for (size_t j = 0; j < bb.size(); ++j) rem[k + j] -= qk * bb[j];
  }
  if (!poly_is_zero(rem)) throw ValidationError("inexact polynomial division");
  return poly_trim(std::move(q));
}

Poly poly_mod(const Poly& a, const Poly& b) {
  Poly rem = poly_trim(a);
  Poly bb = poly_trim(b);
  if (bb.empty() || bb.back() != 1) throw ValidationError("poly_mod expects a monic modulus");
  while (rem.size() >= bb.size()) {
    Int c = rem.back();
    size_t shift = rem.size() - bb.size();
    for (size_t j = 0; j < bb.size(); ++j) rem[shift + j] -= c * bb[j];
    rem = poly_trim(std::move(rem));
  }
  return rem;
}

Int poly_eval(const Poly& p, const Int& x) {
  Int acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_xn_minus_1(long n) {
  Poly p(static_cast<size_t>(n) + 1, Int(0));
  p[0] = -1;
  p.back() = 1;
  return p;
}

Poly cyclotomic(long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly p = poly_xn_minus_1(n);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic(d));
  return p;
}

Poly poly_normalize_units(Poly p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  size_t k = 0;
  while (p[k] == 0) ++k;
  p.erase(p.begin(), p.begin() + static_cast<long>(k));
  if (p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

}  // namespace upscalc
