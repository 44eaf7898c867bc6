#include "upscalc/plfunction.hpp"

#include <algorithm>

namespace upscalc {

namespace {

Rational interpolate(const PLFunction::Breakpoint& a, const PLFunction::Breakpoint& b,
                     const Rational& t) {
  return a.v + (b.v - a.v) * (t - a.t) / (b.t - a.t);
}

bool collinear(const PLFunction::Breakpoint& a, const PLFunction::Breakpoint& b,
               const PLFunction::Breakpoint& c) {
  return (b.v - a.v) * (c.t - b.t) == (c.v - b.v) * (b.t - a.t);
}

}  // namespace

PLFunction::PLFunction(const Rational& domain_end) {
  if (domain_end <= 0) throw DomainError("domain end must be positive");
  pts_ = {{make_rational(0), make_rational(0)}, {domain_end, make_rational(0)}};
}

PLFunction::PLFunction(std::vector<Breakpoint> pts) : pts_(std::move(pts)) {
  if (pts_.size() < 2) throw DomainError("need at least two breakpoints");
  if (pts_.front().t != 0) throw DomainError("first breakpoint must be at t = 0");
  for (size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i - 1].t >= pts_[i].t)
      throw DomainError("breakpoints must be strictly increasing in t");
  canonicalize();
}

void PLFunction::canonicalize() {
  std::vector<Breakpoint> out;
  out.reserve(pts_.size());
  for (auto& p : pts_) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p))
      out.pop_back();
    out.push_back(std::move(p));
  }
  pts_ = std::move(out);
}

Rational PLFunction::eval(const Rational& t) const {
  if (t < 0 || t > domain_end()) throw DomainError("evaluation outside [0, domain_end]");
  auto it = std::lower_bound(pts_.begin(), pts_.end(), t,
                             [](const Breakpoint& p, const Rational& x) { return p.t < x; });
  if (it != pts_.end() && it->t == t) return it->v;
  return interpolate(*(it - 1), *it, t);
}

PLFunction PLFunction::add(const PLFunction& other) const {
  if (domain_end() != other.domain_end()) throw DomainError("mismatched domains");
  std::vector<Breakpoint> merged;
  size_t i = 0, j = 0;
  while (i < pts_.size() || j < other.pts_.size()) {
    Rational t;
    if (j == other.pts_.size() || (i < pts_.size() && pts_[i].t <= other.pts_[j].t))
      t = pts_[i].t;
    else
      t = other.pts_[j].t;
    merged.push_back({t, eval(t) + other.eval(t)});
    while (i < pts_.size() && pts_[i].t == t) ++i;
    while (j < other.pts_.size() && other.pts_[j].t == t) ++j;
  }
  return PLFunction(std::move(merged));
}

PLFunction PLFunction::scale(const Rational& c) const {
  if (c == 0) return PLFunction(domain_end());
  std::vector<Breakpoint> pts = pts_;
  for (auto& p : pts) p.v *= c;
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::negate() const { return scale(make_rational(-1)); }

PLFunction PLFunction::symmetrize() const {
  if (domain_end() != 1) throw DomainError("symmetrize expects a function on [0,1]");
  std::vector<Breakpoint> pts = pts_;
  const Rational two = make_rational(2);
  for (size_t i = pts_.size() - 1; i-- > 0;) pts.push_back({two - pts_[i].t, pts_[i].v});
  return PLFunction(std::move(pts));
}

bool PLFunction::is_convex() const {
  Rational prev_slope;
  for (size_t i = 1; i < pts_.size(); ++i) {
    Rational slope = (pts_[i].v - pts_[i - 1].v) / (pts_[i].t - pts_[i - 1].t);
    if (i > 1 && slope < prev_slope) return false;
    prev_slope = slope;
  }
  return true;
}

PLFunction PLFunction::pointwise_min(const PLFunction& other) const {
  if (domain_end() != other.domain_end()) throw DomainError("mismatched domains");
  // Segment-crossing points join the merged breakpoint grid.
  std::vector<Rational> ts;
  for (auto& p : pts_) ts.push_back(p.t);
  for (auto& p : other.pts_) ts.push_back(p.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> grid;
  for (size_t i = 0; i < ts.size(); ++i) {
    grid.push_back(ts[i]);
    if (i + 1 == ts.size()) break;
    Rational d0 = eval(ts[i]) - other.eval(ts[i]);
    Rational d1 = eval(ts[i + 1]) - other.eval(ts[i + 1]);
    if ((d0 > 0 && d1 < 0) || (d0 < 0 && d1 > 0)) {
      Rational x = ts[i] + d0 * (ts[i + 1] - ts[i]) / (d0 - d1);
      grid.push_back(x);
    }
  }
  std::vector<Breakpoint> pts;
  for (auto& t : grid) pts.push_back({t, std::min(eval(t), other.eval(t))});
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::upper_envelope(std::span<const Line> lines,
                                      const Rational& domain_end) {
  if (lines.empty()) throw std::invalid_argument("upper_envelope: empty line set");
  std::vector<Line> ls(lines.begin(), lines.end());
  std::sort(ls.begin(), ls.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept > b.intercept;
  });
  // Drop duplicate slopes, keeping the larger intercept.
  std::vector<Line> uniq;
  for (auto& l : ls)
    if (uniq.empty() || uniq.back().slope != l.slope) uniq.push_back(l);

  // Convex-hull sweep: hull lines by increasing slope, with increasing
  // intersection abscissae.
  auto cross_x = [](const Line& a, const Line& b) -> Rational {
    return Rational((a.intercept - b.intercept) / (b.slope - a.slope));
  };
  std::vector<Line> hull;
  for (auto& l : uniq) {
    while (hull.size() >= 2 &&
           cross_x(hull[hull.size() - 2], l) <= cross_x(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    hull.push_back(l);
  }

  const Rational zero = make_rational(0);
  std::vector<Breakpoint> pts;
  size_t active = 0;
  // Skip hull lines already overtaken before t = 0.
  while (active + 1 < hull.size() && cross_x(hull[active], hull[active + 1]) <= zero) ++active;
  pts.push_back({zero, hull[active].intercept});
  while (active + 1 < hull.size()) {
    Rational x = cross_x(hull[active], hull[active + 1]);
    if (x >= domain_end) break;
    ++active;
    pts.push_back({x, hull[active].slope * x + hull[active].intercept});
  }
  pts.push_back({domain_end, hull[active].slope * domain_end + hull[active].intercept});
  return PLFunction(std::move(pts));
}

}  // namespace upscalc
