#pragma once

#include <vector>

#include "upscalc/errors.hpp"

namespace upscalc {

// Counting function H of a genus-g numerical semigroup: H(i) = number of
// semigroup elements strictly below i.  Stored on [0, 2g]; outside that
// window H(i) = 0 for i <= 0 and H(i) = i - g for i >= 2g.
class CountingFunction {
 public:
  CountingFunction(long genus, std::vector<long> values);

  long genus() const { return genus_; }
  const std::vector<long>& values() const { return values_; }

  // Accessor with the extension conventions above; defined for all i.
  long operator()(long i) const {
    if (i <= 0) return 0;
    if (i >= 2 * genus_) return i - genus_;
    return values_[static_cast<size_t>(i)];
  }

  // Indices i in [0, 2g) with H(i+1) = H(i); there are exactly g of them.
  std::vector<long> gaps() const;

  bool operator==(const CountingFunction&) const = default;

 private:
  long genus_;
  std::vector<long> values_;
};

// Counting function of the semigroup <a, b> for coprime a, b;
// genus (a-1)(b-1)/2.  Membership by sieve, not closed form.
CountingFunction torus_counting(long a, long b);

// H3(i) = min_j { H1(i-j) + H2(j) }; genus adds.
CountingFunction min_convolve(const CountingFunction& h1, const CountingFunction& h2);

}  // namespace upscalc
