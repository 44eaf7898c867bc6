#include "upscalc/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "upscalc/errors.hpp"

namespace upscalc {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int l : letters_)
    if (l == 0 || std::abs(l) > strands_ - 1)
      throw std::invalid_argument("letter " + std::to_string(l) + " out of range for " +
                                  std::to_string(strands_) + " strands");
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  std::string cleaned = text;
  for (auto& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> letters;
  int max_abs = 0;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad braid letter '" + tok + "'");
    if (v == 0) throw ParseError("braid letter 0 is not allowed");
    letters.push_back(v);
    max_abs = std::max(max_abs, std::abs(v));
  }
  if (strands == 0) strands = std::max(1, max_abs + 1);
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters_) w += (l > 0) ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> wire_at_slot(strands_);
  std::iota(wire_at_slot.begin(), wire_at_slot.end(), 0);
  for (int l : letters_) {
    int i = std::abs(l) - 1;
    std::swap(wire_at_slot[i], wire_at_slot[i + 1]);
  }
  std::vector<int> perm(strands_);
  for (int slot = 0; slot < strands_; ++slot) perm[wire_at_slot[slot]] = slot;
  return perm;
}

int BraidWord::closure_components() const {
  std::vector<int> perm = permutation();
  std::vector<bool> seen(strands_, false);
  int cycles = 0;
  for (int i = 0; i < strands_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

bool BraidWord::is_pure() const {
  std::vector<int> perm = permutation();
  for (int i = 0; i < strands_; ++i)
    if (perm[i] != i) return false;
  return true;
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (strands_ != other.strands_) throw std::invalid_argument("strand count mismatch");
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::power(int k) const {
  if (k < 0) throw std::invalid_argument("power expects k >= 0");
  std::vector<int> letters;
  letters.reserve(letters_.size() * k);
  for (int i = 0; i < k; ++i) letters.insert(letters.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& l : letters) l = -l;
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::mirror() const {
  std::vector<int> letters = letters_;
  for (int& l : letters) l = -l;
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::conjugate(const BraidWord& w) const {
  return w.concat(*this).concat(w.inverse());
}

BraidWord BraidWord::free_reduced() const {
  std::vector<int> stack;
  for (int l : letters_) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(strands_, std::move(stack));
}

BraidWord torus_braid(int n, int q) {
  if (n < 2 || q < 1) throw std::invalid_argument("torus_braid expects n >= 2, q >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(n - 1) * q);
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord full_twist(int n) { return torus_braid(n, n); }

BraidWord family_beta_n(int n) {
  if (n < 1) throw std::invalid_argument("family_beta_n expects n >= 1");
  return BraidWord(3, {1, 1, 2, 2}).power(n);
}

BraidWord family_K_n(int n) { return family_beta_n(n).concat(BraidWord(3, {1, 2})); }

BraidWord QuasipositiveWitness::expand() const {
  BraidWord out = BraidWord::identity(strands);
  for (const auto& band : bands) {
    if (band.generator_index < 1 || band.generator_index > strands - 1)
      throw std::invalid_argument("band generator index out of range");
    out = out.concat(BraidWord(strands, {band.generator_index}).conjugate(band.conjugator));
  }
  return out;
}

Rational QuasipositiveWitness::rudolph_genus() const {
  if (strands == 1 && bands.empty()) return make_rational(0);  // unknot
  if (expand().closure_components() != 1)
    throw ValidationError("quasipositive witness closure is not a knot");
  return make_rational(static_cast<long>(bands.size()) - strands + 1, 2);
}

}  // namespace upscalc
