#include <vector>

#include "sitwist/braid.hpp"
#include "sitwist/error.hpp"
#include "sitwist/lamination.hpp"

namespace sitwist {

namespace {

std::vector<LoopCoordinates> test_curves(int n, const EqualityOptions& options) {
  std::vector<BraidWord> conjugators = options.conjugators;
  if (conjugators.empty()) {
    conjugators.push_back(half_twist_word(n, 1, n));
    conjugators.push_back(BraidWord::generator(n, 1));
  }
  std::vector<LoopCoordinates> curves;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      const LoopCoordinates c = round_curve(n, i, j);
      curves.push_back(c);
      for (const auto& g : conjugators) curves.push_back(apply_braid(c, g));
    }
  }
  return curves;
}

}  // namespace

bool is_trivial(const BraidWord& a, const EqualityOptions& options) {
  if (exponent_sum(a) != 0) return false;
  const int n = a.strands();
  // B_1 is trivial and B_2 is infinite cyclic
  if (n <= 2) return true;
  const BraidWord d = a.reduced();
  if (d.empty()) return true;
  for (const auto& c : test_curves(n, options)) {
    if (!(apply_braid(c, d) == c)) return false;
  }
  return true;
}

bool equals(const BraidWord& a, const BraidWord& b, const EqualityOptions& options) {
  if (a.strands() != b.strands()) throw DomainError("equals: strand count mismatch");
  return is_trivial(compose(a, inverse(b)), options);
}

}  // namespace sitwist
