#pragma once

#include <string>
#include <vector>

#include "upscalc/rational.hpp"

namespace upscalc {

// Word in the braid group B_n.  Letter i (1 <= i <= n-1) is the standard
// generator a_i; -i is its inverse.  Positive generator = positive crossing.
// Words are raw sequences: no normal form, free reduction is explicit.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  // Whitespace- or comma-separated signed integers.  strands = 0 infers
  // n = max|letter| + 1 (at least 1).
  static BraidWord parse(const std::string& text, int strands = 0);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  std::string to_string() const;

  int writhe() const;

  // perm[i] = bottom slot of the strand entering top slot i (0-based).
  std::vector<int> permutation() const;
  int closure_components() const;
  bool is_pure() const;

  BraidWord concat(const BraidWord& other) const;
  BraidWord power(int k) const;  // k >= 0
  BraidWord inverse() const;
  BraidWord mirror() const;  // negate all letters
  BraidWord conjugate(const BraidWord& w) const;  // w * this * w^-1
  BraidWord free_reduced() const;  // cancel adjacent i, -i pairs

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// (a_1 a_2 ... a_{n-1})^q; closes to the (n,q) torus link.
BraidWord torus_braid(int n, int q);
// Full twist Delta^2 = (a_1 ... a_{n-1})^n.
BraidWord full_twist(int n);
// The 3-braid (a_1^2 a_2^2)^n.
BraidWord family_beta_n(int n);
// beta_n followed by a_1 a_2; closes to the knot K_n.
BraidWord family_K_n(int n);

// Product of conjugates w a_i w^-1; the closure is quasi-positive with
// slice genus (l - n + 1) / 2.
struct QuasipositiveWitness {
  struct Band {
    BraidWord conjugator;
    int generator_index;  // in [1, n-1]
  };
  int strands;
  std::vector<Band> bands;

  BraidWord expand() const;
  Rational rudolph_genus() const;  // requires knot closure
};

}  // namespace upscalc
