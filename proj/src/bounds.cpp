#include "upscalc/bounds.hpp"

#include <algorithm>
#include <cctype>

#include "upscalc/errors.hpp"

namespace upscalc {

TwistCertificate TwistCertificate::twisted_braid_closure(long n, long k, Rational g4) {
  if (n < 1 || k < 0) throw std::invalid_argument("bad twisted-braid-closure parameters");
  TwistCertificate c;
  c.n_lower = n;
  c.k_lower = k;
  c.m_upper = n;
  c.g4 = std::move(g4);
  c.provenance = CertProvenance::TwistedBraidClosure;
  c.g4_verified = true;
  return c;
}

TwistCertificate TwistCertificate::quasipositive_braid_index(long n, Rational g4) {
  TwistCertificate c;
  c.n_lower = 1;
  c.k_lower = 0;
  c.m_upper = n;
  c.g4 = std::move(g4);
  c.provenance = CertProvenance::QuasipositiveBraidIndex;
  c.g4_verified = true;
  return c;
}

TwistCertificate TwistCertificate::from_torus_knot(const TorusKnotSpec& spec) {
  if (spec.mirrored)
    throw std::invalid_argument("certificates are built for unmirrored torus knots only");
  if (spec.is_unknot()) return twisted_braid_closure(1, 0, make_rational(0));
  return twisted_braid_closure(spec.p, spec.q / spec.p, g4_torus(spec));
}

TwistCertificate TwistCertificate::parse(const std::string& text) {
  // cert(n=3,k=2,g4=6[,m=3])
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind("cert(", 0) != 0 || t.back() != ')')
    throw ParseError("expected cert(n=..,k=..,g4=..)");
  std::string body = t.substr(5, t.size() - 6);
  TwistCertificate c;
  c.provenance = CertProvenance::Manual;
  bool have_n = false, have_k = false, have_g4 = false, have_m = false;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string field = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? body.size() : comma + 1;
    size_t eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("bad certificate field '" + field + "'");
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "n") {
      c.n_lower = std::stol(val);
      have_n = true;
    } else if (key == "k") {
      c.k_lower = std::stol(val);
      have_k = true;
    } else if (key == "g4") {
      c.g4 = parse_rational(val);
      have_g4 = true;
    } else if (key == "m") {
      if (val == "inf")
        c.m_upper.reset();
      else
        c.m_upper = std::stol(val);
      have_m = true;
    } else {
      throw ParseError("unknown certificate field '" + key + "'");
    }
  }
  if (!have_n || !have_k || !have_g4) throw ParseError("certificate needs n, k, and g4");
  if (!have_m) c.m_upper = c.n_lower;  // twisted-braid-closure certificate shape
  if (c.m_upper && c.n_lower > *c.m_upper)
    throw ParseError("certificate violates n_lower <= m_upper");
  return c;
}

std::pair<Rational, Rational> triangle_bounds(const Rational& g4K, const Rational& g4L) {
  return {rational_abs(g4K - g4L), g4K + g4L};
}

std::optional<Rational> improved_bound(const TwistCertificate& certK,
                                       const TwistCertificate& certL) {
  if (!certK.m_upper) return std::nullopt;
  return make_rational(certL.k_lower) * make_rational(certL.n_lower - *certK.m_upper) +
         certK.g4 - certL.g4;
}

BoundReport cobordism_report(const TwistCertificate& certK, const TwistCertificate& certL) {
  BoundReport r;
  auto [lo, hi] = triangle_bounds(certK.g4, certL.g4);
  r.triangle_lower = lo;
  r.triangle_upper = hi;
  r.witnesses.emplace_back("triangle", lo);
  r.best_lower = lo;
  if (auto imp = improved_bound(certK, certL)) {
    r.improved_lower = *imp;
    r.witnesses.emplace_back("twist-improved", *imp);
    r.best_lower = std::max(r.best_lower, *imp);
  }
  return r;
}

Rational slice_bennequin_tau(const BraidWord& b) {
  if (b.closure_components() != 1)
    throw std::invalid_argument("slice_bennequin_tau: closure is not a knot");
  return make_rational(b.writhe() - b.strands() + 1, 2);
}

bool jones_inequality_check(const BraidWord& beta, const BraidWord& beta_prime, long b) {
  long diff = std::abs(static_cast<long>(beta.writhe()) - beta_prime.writhe());
  return diff <= beta.strands() - b;
}

std::optional<BraidIndexBound> concordance_braid_index_bound(const TwistCertificate& cert,
                                                            bool extra_positive_row) {
  if (cert.provenance != CertProvenance::TwistedBraidClosure) return std::nullopt;
  long n = cert.n_lower, k = cert.k_lower;
  if (n <= 1 || k < 1) return std::nullopt;
  if (k >= n - 1 && extra_positive_row)
    return BraidIndexBound{n, BraidIndexScope::AllConcordantKnots};
  return BraidIndexBound{n, BraidIndexScope::QuasipositiveComparatorsOnly};
}

Rational prop36_slack(const PLFunction& f, const Rational& g4, const TwistCertificate& cert,
                      const Rational& t) {
  Rational rhs = -t * g4 + make_rational(cert.k_lower) *
                               (make_rational(cert.n_lower) * t - make_rational(2));
  return f.eval(t) - rhs;
}

bool prop36_consistency(const PLFunction& f, const Rational& g4,
                        const TwistCertificate& cert) {
  // Clause 1: f(t) = -t g4 on [0, 2/m_upper].
  if (cert.m_upper) {
    Rational cutoff = make_rational(2, *cert.m_upper);
    try {
      if (first_breakpoint(f, g4) < std::min(cutoff, f.domain_end())) return false;
    } catch (const ValidationError&) {
      return false;  // initial slope mismatch
    }
  }
  // Clause 2: f(t) >= -t g4 + k (n t - 2) on (2/n_lower, 1].  Both sides
  // are piecewise linear, so breakpoints plus endpoints suffice.
  Rational lo = make_rational(2, cert.n_lower);
  Rational hi = make_rational(1);
  if (lo < hi) {
    if (prop36_slack(f, g4, cert, lo) < 0 || prop36_slack(f, g4, cert, hi) < 0) return false;
    for (const auto& bp : f.breakpoints())
      if (bp.t > lo && bp.t < hi && prop36_slack(f, g4, cert, bp.t) < 0) return false;
  }
  return true;
}

}  // namespace upscalc
