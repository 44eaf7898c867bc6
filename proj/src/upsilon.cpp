#include "upscalc/upsilon.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "upscalc/errors.hpp"
#include "upscalc/semigroup.hpp"

namespace upscalc {

TorusKnotSpec TorusKnotSpec::make(long p, long q, bool mirrored) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus knot parameters must be positive");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) +
                                ") is a link: gcd > 1");
  if (p > q) std::swap(p, q);
  if (p == 1) return TorusKnotSpec{1, 1, false};  // unknot, mirror irrelevant
  return TorusKnotSpec{p, q, mirrored};
}

PLFunction ups_staircase(long n) {
  if (n < 2) throw std::invalid_argument("ups_staircase expects n >= 2");
  std::vector<PLFunction::Breakpoint> pts;
  for (long i = 0; i <= n; ++i)
    pts.push_back({make_rational(2 * i, n), make_rational(i * (i - n))});
  return PLFunction(std::move(pts));
}

EuclidDecomposition euclid_decompose(long p, long q) {
  if (p < 1 || q < 1 || p >= q || std::gcd(p, q) != 1)
    throw std::invalid_argument("euclid_decompose expects coprime 1 <= p < q");
  std::vector<std::pair<long, long>> terms;  // (r, multiplicity), r descending
  long a = p, b = q;
  while (a >= 2) {
    long mult = b / a;
    long rem = b % a;
    terms.emplace_back(a, mult);
    b = a;
    a = rem;
  }
  // Aggregate repeated r values (they can repeat only consecutively).
  EuclidDecomposition out;
  for (auto& [r, m] : terms) {
    if (!out.terms.empty() && out.terms.back().first == r)
      out.terms.back().second += m;
    else
      out.terms.emplace_back(r, m);
  }
  return out;
}

PLFunction ups_torus_euclid(long p, long q) {
  if (p > q) std::swap(p, q);
  if (p == q) {
    if (p != 1) throw std::invalid_argument("not coprime");
    return PLFunction();  // unknot
  }
  EuclidDecomposition dec = euclid_decompose(p, q);
  PLFunction acc;
  for (auto& [r, m] : dec.terms) acc = acc.add(ups_staircase(r).scale(make_rational(m)));
  return acc;
}

PLFunction ups_torus_semigroup_window(long p, long q, long imin_offset, long imax_offset) {
  if (p > q) std::swap(p, q);
  if (p == 1 || q == 1) return PLFunction();
  CountingFunction h = torus_counting(p, q);
  long g = h.genus();
  std::vector<Line> lines;
  for (long i = imin_offset; i <= 2 * g + imax_offset; ++i)
    lines.push_back({make_rational(-(g - i)), make_rational(-2 * h(i))});
  PLFunction half = PLFunction::upper_envelope(lines, make_rational(1));
  return half.symmetrize();
}

PLFunction ups_torus_semigroup(long p, long q) {
  return ups_torus_semigroup_window(p, q, 0, 0);
}

PLFunction ups_expr(const KnotExpr& e) {
  PLFunction acc;
  for (auto& [spec, mult] : e.summands) {
    if (spec.is_unknot()) continue;
    PLFunction u = ups_torus_euclid(spec.p, spec.q).scale(make_rational(mult));
    acc = acc.add(spec.mirrored ? u.negate() : u);
  }
  return acc;
}

Rational tau_expr(const KnotExpr& e) {
  Rational acc = make_rational(0);
  for (auto& [spec, mult] : e.summands) {
    if (spec.is_unknot()) continue;
    Rational g4 = make_rational((spec.p - 1) * (spec.q - 1), 2);
    acc += (spec.mirrored ? -g4 : g4) * mult;
  }
  return acc;
}

Rational g4_torus(const TorusKnotSpec& spec) {
  if (spec.mirrored)
    throw std::invalid_argument("g4 of mirrored summands is not computed here");
  return make_rational((spec.p - 1) * (spec.q - 1), 2);
}

bool check_obs_small_t(const TorusKnotSpec& spec) {
  if (spec.mirrored) throw std::invalid_argument("check_obs_small_t expects unmirrored spec");
  if (spec.is_unknot()) return true;
  PLFunction u = ups_torus_euclid(spec.p, spec.q);
  return first_breakpoint(u, g4_torus(spec)) >= make_rational(2, spec.p);
}

Rational slack_obs(const TorusKnotSpec& spec, const Rational& t) {
  if (spec.mirrored) throw std::invalid_argument("slack_obs expects unmirrored spec");
  Rational g4 = g4_torus(spec);
  Rational bound = -t * g4 + make_rational(spec.q / spec.p) * (make_rational(spec.p) * t - 2);
  return ups_torus_euclid(spec.p, spec.q).eval(t) - bound;
}

Rational first_breakpoint(const PLFunction& f, const Rational& g4) {
  const auto& pts = f.breakpoints();
  Rational slope0 = (pts[1].v - pts[0].v) / (pts[1].t - pts[0].t);
  if (pts[0].v != 0 || slope0 != -g4)
    throw ValidationError("initial slope does not match -g4");
  return pts[1].t;
}

long mk_lower_bound(const PLFunction& f, const Rational& g4) {
  Rational tstar = first_breakpoint(f, g4);
  return rational_ceil(make_rational(2) / tstar).get_si();
}

// --- KnotExpr grammar -----------------------------------------------------

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i));
  }
  long integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer at position " + std::to_string(start));
    return std::stol(s.substr(start, i - start));
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

std::pair<TorusKnotSpec, long> parse_term(Cursor& c) {
  bool mirrored = c.eat('-');
  long mult = 1;
  c.skip_ws();
  if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    mult = c.integer();
    if (mult < 1) throw ParseError("multiplicity must be positive");
    c.expect('*');
  }
  c.skip_ws();
  if (c.i >= c.s.size() || c.s[c.i] != 'T')
    throw ParseError("expected 'T(' at position " + std::to_string(c.i));
  ++c.i;
  c.expect('(');
  long p = c.integer();
  c.expect(',');
  long q = c.integer();
  c.expect(')');
  TorusKnotSpec spec;
  try {
    spec = TorusKnotSpec::make(p, q, mirrored);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return {spec, mult};
}

}  // namespace

KnotExpr KnotExpr::parse(const std::string& text) {
  Cursor c{text};
  KnotExpr e;
  c.skip_ws();
  if (c.done()) return e;  // empty expression = unknot
  while (true) {
    auto [spec, mult] = parse_term(c);
    if (!spec.is_unknot()) e.summands.emplace_back(spec, mult);
    if (c.done()) break;
    c.expect('#');
  }
  return e;
}

std::string KnotExpr::render() const {
  if (summands.empty()) return "T(1,1)";
  std::string out;
  for (size_t i = 0; i < summands.size(); ++i) {
    const auto& [spec, mult] = summands[i];
    if (i) out += " # ";
    if (spec.mirrored) out += '-';
    if (mult != 1) out += std::to_string(mult) + "*";
    out += "T(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")";
  }
  return out;
}

}  // namespace upscalc
