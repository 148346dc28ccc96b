#include "sitwist/twist.hpp"

#include <cstdlib>
#include <string>

#include "sitwist/error.hpp"

namespace sitwist {

namespace {

void check_prep(const BraidWord& prep, int n) {
  if (prep.strands() != n) {
    throw DomainError("prep word has " + std::to_string(prep.strands()) + " strands, expected " +
                      std::to_string(n));
  }
}

// Chronological word moving the puncture at position `from` to position
// `to` < from, crossing the punctures in between with sign `sign`.
BraidWord slide_left(int n, int from, int to, int sign) {
  std::vector<Letter> out;
  for (int k = from - 1; k >= to; --k) out.push_back(sign * k);
  return BraidWord(n, std::move(out));
}

// Side on which the push curves pass the punctures between i and p.
constexpr int kPushSide = 1;

}  // namespace

CurveSpec::CurveSpec(int n, int i, int j, BraidWord prep_word)
    : punctures(n), first(i), last(j), prep(std::move(prep_word)) {
  if (n < 2 || i < 1 || j > n || i >= j) {
    throw DomainError("curve base (" + std::to_string(i) + "," + std::to_string(j) +
                      ") invalid for " + std::to_string(n) + " punctures");
  }
  if (prep.letters().empty() && prep.strands() == 1) prep = BraidWord(n);
  check_prep(prep, n);
}

ArcSpec::ArcSpec(int n, int i, BraidWord prep_word) : punctures(n), left(i), prep(std::move(prep_word)) {
  if (n < 2 || i < 1 || i >= n) {
    throw DomainError("arc base " + std::to_string(i) + " invalid for " + std::to_string(n) +
                      " punctures");
  }
  if (prep.letters().empty() && prep.strands() == 1) prep = BraidWord(n);
  check_prep(prep, n);
}

BraidWord full_twist_word(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw DomainError("full_twist_word: need 1 <= i < j <= n");
  std::vector<Letter> out;
  for (int r = 0; r < j - i + 1; ++r) {
    for (int k = i; k < j; ++k) out.push_back(k);
  }
  return BraidWord(n, std::move(out));
}

LoopCoordinates realize(const CurveSpec& c) {
  return apply_braid(round_curve(c.punctures, c.first, c.last), c.prep);
}

CurveSpec arc_boundary(const ArcSpec& a) { return CurveSpec(a.punctures, a.left, a.left + 1, a.prep); }

CurveSpec transport(const CurveSpec& c, const BraidWord& g) {
  return CurveSpec(c.punctures, c.first, c.last, then(c.prep, g));
}

ArcSpec transport(const ArcSpec& a, const BraidWord& g) { return ArcSpec(a.punctures, a.left, then(a.prep, g)); }

BraidWord dehn_twist(const CurveSpec& c) {
  check_prep(c.prep, c.punctures);
  return conjugate(full_twist_word(c.punctures, c.first, c.last), c.prep);
}

BraidWord half_twist(const ArcSpec& a) {
  check_prep(a.prep, a.punctures);
  return conjugate(BraidWord::generator(a.punctures, a.left), a.prep);
}

BraidWord bh_twist_image(const CurveSpec& c) {
  const int k = c.enclosed();
  if (k < 3 || k % 2 == 0) {
    throw DomainError("curve encloses " + std::to_string(k) +
                      " punctures; a symmetric separating curve needs an odd number >= 3");
  }
  return power(dehn_twist(c), 2);
}

CurveSpec push_curve(int n, int i) {
  if (i < 1 || i > n) throw DomainError("push_curve: puncture " + std::to_string(i) + " out of range");
  return CurveSpec(n + 1, n, n + 1, slide_left(n + 1, n, i, kPushSide));
}

BraidWord push_loop(const FreeWord& w, BasePosition base) {
  const int n = w.rank();
  std::vector<BraidWord> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) gens.push_back(dehn_twist(push_curve(n, i)));
  BraidWord out(n + 1);
  for (int l : w.letters()) {
    const BraidWord& t = gens[static_cast<std::size_t>(std::abs(l) - 1)];
    out = then(out, l > 0 ? inverse(t) : t);
  }
  if (base == BasePosition::leftmost) {
    out = conjugate(out, slide_left(n + 1, n + 1, 1, kPushSide));
  }
  return out;
}

BraidWord cable_strand(const BraidWord& w, int strand) {
  const int n = w.strands();
  if (strand < 1 || strand > n) throw DomainError("cable_strand: strand out of range");
  int q = strand;
  std::vector<Letter> out;
  out.reserve(w.length() + 8);
  for (Letter l : w.letters()) {
    const int j = std::abs(l);
    const int s = l > 0 ? 1 : -1;
    if (j + 1 < q) {
      out.push_back(l);
    } else if (j > q) {
      out.push_back(s * (j + 1));
    } else if (j == q) {
      out.push_back(s * (q + 1));
      out.push_back(s * q);
      q += 1;
    } else {
      out.push_back(s * (q - 1));
      out.push_back(s * q);
      q -= 1;
    }
  }
  return BraidWord(n + 1, std::move(out));
}

namespace {

int starting_position(const BraidWord& prep, int final_position) {
  return underlying_permutation(prep).inverse()(final_position);
}

}  // namespace

CurveSpec cable_curve(const CurveSpec& c, int strand) {
  const int q = starting_position(c.prep, strand);
  const int first = c.first > q ? c.first + 1 : c.first;
  const int last = c.last >= q ? c.last + 1 : c.last;
  return CurveSpec(c.punctures + 1, first, last, cable_strand(c.prep, q));
}

ArcSpec cable_arc(const ArcSpec& a, int strand) {
  const int q = starting_position(a.prep, strand);
  if (q == a.left || q == a.left + 1) throw DomainError("cable_arc: the doubled strand is an arc endpoint");
  return ArcSpec(a.punctures + 1, a.left > q ? a.left + 1 : a.left, cable_strand(a.prep, q));
}

}  // namespace sitwist
