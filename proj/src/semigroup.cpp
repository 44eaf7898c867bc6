#include "upscalc/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace upscalc {

namespace {

void check_invariants(long genus, const std::vector<long>& values) {
  if (genus < 0) throw ValidationError("negative genus");
  if (values.size() != static_cast<size_t>(2 * genus + 1))
    throw ValidationError("counting function must store H(0..2g)");
  if (values[0] != 0) throw ValidationError("H(0) must be 0");
  long flats = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    long step = values[i] - values[i - 1];
    if (step != 0 && step != 1) throw ValidationError("H steps must be 0 or 1");
    if (step == 0) ++flats;
  }
  if (values.back() != genus) throw ValidationError("H(2g) must equal g");
  if (flats != genus) throw ValidationError("gap count must equal the genus");
}

}  // namespace

CountingFunction::CountingFunction(long genus, std::vector<long> values)
    : genus_(genus), values_(std::move(values)) {
  check_invariants(genus_, values_);
}

std::vector<long> CountingFunction::gaps() const {
  std::vector<long> out;
  for (long i = 0; i < 2 * genus_; ++i)
    if (values_[static_cast<size_t>(i + 1)] == values_[static_cast<size_t>(i)])
      out.push_back(i);
  return out;
}

CountingFunction torus_counting(long a, long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("generators must be positive");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("generators " + std::to_string(a) + ", " +
                                std::to_string(b) + " are not coprime");
  if (a > b) std::swap(a, b);
  if (a == 1) return CountingFunction(0, {0});
  long genus = (a - 1) * (b - 1) / 2;
  long top = 2 * genus;
  std::vector<char> member(static_cast<size_t>(top) + 1, 0);
  for (long x = 0; x * a <= top; ++x)
    for (long s = x * a; s <= top; s += b) member[static_cast<size_t>(s)] = 1;
  std::vector<long> values(static_cast<size_t>(top) + 1, 0);
  for (long i = 1; i <= top; ++i)
    values[static_cast<size_t>(i)] =
        values[static_cast<size_t>(i - 1)] + member[static_cast<size_t>(i - 1)];
  return CountingFunction(genus, std::move(values));
}

CountingFunction min_convolve(const CountingFunction& h1, const CountingFunction& h2) {
  long genus = h1.genus() + h2.genus();
  std::vector<long> values(static_cast<size_t>(2 * genus) + 1);
  for (long i = 0; i <= 2 * genus; ++i) {
    long best = h1(i);  // j = 0
    for (long j = 1; j <= i; ++j) best = std::min(best, h1(i - j) + h2(j));
    values[static_cast<size_t>(i)] = best;
  }
  try {
    return CountingFunction(genus, std::move(values));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("min_convolve produced an invalid counting function: ") +
                          e.what());
  }
}

}  // namespace upscalc
