#pragma once

#include <span>
#include <string>
#include <vector>

#include "upscalc/rational.hpp"

namespace upscalc {

// A line t -> slope * t + intercept, used as envelope input.
struct Line {
  Rational slope;
  Rational intercept;
};

// Continuous piecewise-linear function on [0, domain_end] with rational
// breakpoints.  Canonical form: breakpoints strictly increasing in t,
// first at t = 0, last at t = domain_end, no three consecutive collinear.
// Equality is structural on the canonical breakpoint list.
class PLFunction {
 public:
  struct Breakpoint {
    Rational t;
    Rational v;
    bool operator==(const Breakpoint&) const = default;
  };

  // Zero function on [0, domain_end].
  explicit PLFunction(const Rational& domain_end = make_rational(2));

  // Canonicalizes; throws DomainError if the list is not strictly
  // increasing or does not start at 0.
  explicit PLFunction(std::vector<Breakpoint> pts);

  const std::vector<Breakpoint>& breakpoints() const { return pts_; }
  const Rational& domain_end() const { return pts_.back().t; }

  Rational eval(const Rational& t) const;

  PLFunction add(const PLFunction& other) const;
  PLFunction scale(const Rational& c) const;
  PLFunction negate() const;

  // Reflection across t = domain_end: input on [0,1] becomes the
  // symmetric function on [0,2].
  PLFunction symmetrize() const;

  bool is_convex() const;
  PLFunction pointwise_min(const PLFunction& other) const;

  bool operator==(const PLFunction&) const = default;

  // Pointwise maximum of lines on [0, domain_end]; equal slopes keep the
  // larger intercept.  Result is convex.
  static PLFunction upper_envelope(std::span<const Line> lines,
                                   const Rational& domain_end);

 private:
  std::vector<Breakpoint> pts_;

  void canonicalize();
};

inline PLFunction operator+(const PLFunction& a, const PLFunction& b) { return a.add(b); }
inline PLFunction operator-(const PLFunction& a) { return a.negate(); }

}  // namespace upscalc
