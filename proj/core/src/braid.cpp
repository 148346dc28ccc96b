#include "sitwist/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "sitwist/error.hpp"

namespace sitwist {

namespace {

void check_letter(int strands, Letter l) {
  if (l == 0) throw DomainError("braid letter 0 is not a generator");
  if (std::abs(l) > strands - 1) {
    throw DomainError("generator index " + std::to_string(std::abs(l)) +
                      " out of range for " + std::to_string(strands) + " strands");
  }
}

void check_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw DomainError("strand count mismatch: " + std::to_string(a.strands()) + " vs " +
                      std::to_string(b.strands()));
  }
}

// Appends letters with eager free reduction.
void push_reduced(std::vector<Letter>& out, std::span<const Letter> in) {
  for (Letter l : in) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw DomainError("a braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw DomainError("a braid needs at least one strand");
  for (Letter l : letters_) check_letter(strands_, l);
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {sign < 0 ? -index : index});
}

BraidWord BraidWord::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  push_reduced(out, letters_);
  return BraidWord(strands_, std::move(out));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  for (int k = 0; k < n; ++k) images_[static_cast<std::size_t>(k)] = k + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (int k = 0; k < size(); ++k) {
    if (images_[static_cast<std::size_t>(k)] != k + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("permutation size mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) out[static_cast<std::size_t>(k - 1)] = p(q(k));
  return Permutation(std::move(out));
}

LinkingMatrix::LinkingMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

long LinkingMatrix::at(int i, int j) const {
  return entries_.at(static_cast<std::size_t>((i - 1) * n_ + (j - 1)));
}

void LinkingMatrix::add(int i, int j, long delta) {
  entries_.at(static_cast<std::size_t>((i - 1) * n_ + (j - 1))) += delta;
  entries_.at(static_cast<std::size_t>((j - 1) * n_ + (i - 1))) += delta;
}

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 1) throw DomainError("a braid needs at least one strand");
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw ParseError("malformed braid token '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    if (value == 0) throw ParseError("braid token 0 is not a generator");
    if (std::abs(value) > strands - 1) {
      throw ParseError("generator index " + std::to_string(std::abs(value)) + " out of range for " +
                       std::to_string(strands) + " strands");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

BraidWord then(const BraidWord& first, const BraidWord& second) {
  check_same_strands(first, second);
  std::vector<Letter> out(first.letters().begin(), first.letters().end());
  push_reduced(out, second.letters());
  return BraidWord(first.strands(), std::move(out));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) { return then(b, a); }

BraidWord inverse(const BraidWord& a) {
  std::vector<Letter> out(a.letters().rbegin(), a.letters().rend());
  for (Letter& l : out) l = -l;
  return BraidWord(a.strands(), std::move(out));
}

BraidWord power(const BraidWord& a, int k) {
  const BraidWord base = k < 0 ? inverse(a) : a;
  BraidWord out(a.strands());
  for (int r = 0; r < std::abs(k); ++r) out = then(out, base);
  return out;
}

BraidWord conjugate(const BraidWord& a, const BraidWord& g) {
  return compose(compose(g, a), inverse(g));
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

BraidWord mirror(const BraidWord& a) {
  std::vector<Letter> out(a.letters().begin(), a.letters().end());
  for (Letter& l : out) l = -l;
  return BraidWord(a.strands(), std::move(out));
}

long exponent_sum(const BraidWord& a) {
  long sum = 0;
  for (Letter l : a.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

Permutation underlying_permutation(const BraidWord& a) {
  // at[p] = strand currently at position p
  std::vector<int> at(static_cast<std::size_t>(a.strands()));
  for (int p = 0; p < a.strands(); ++p) at[static_cast<std::size_t>(p)] = p + 1;
  for (Letter l : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) {
    images[static_cast<std::size_t>(at[p] - 1)] = static_cast<int>(p) + 1;
  }
  return Permutation(std::move(images));
}

bool is_pure(const BraidWord& a) { return underlying_permutation(a).is_identity(); }

LinkingMatrix linking_matrix(const BraidWord& a) {
  if (!is_pure(a)) throw DomainError("linking numbers need a pure braid");
  const int n = a.strands();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) at[static_cast<std::size_t>(p)] = p + 1;
  LinkingMatrix crossings(n);
  for (Letter l : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    crossings.add(at[i], at[i + 1], l > 0 ? 1 : -1);
    std::swap(at[i], at[i + 1]);
  }
  LinkingMatrix lk(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // pure braids cross each pair an even number of times
      lk.add(i, j, crossings.at(i, j) / 2);
    }
  }
  return lk;
}

BraidWord forget_strands(const BraidWord& a, std::span<const int> keep) {
  if (!is_pure(a)) throw DomainError("forget_strands needs a pure braid");
  if (keep.empty()) throw DomainError("keep set is empty");
  const int n = a.strands();
  std::vector<bool> kept(static_cast<std::size_t>(n + 1), false);
  int prev = 0;
  for (int s : keep) {
    if (s < 1 || s > n) throw DomainError("strand " + std::to_string(s) + " out of range");
    if (s <= prev) throw DomainError("keep list must be strictly increasing");
    kept[static_cast<std::size_t>(s)] = true;
    prev = s;
  }
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) at[static_cast<std::size_t>(p)] = p + 1;
  std::vector<Letter> out;
  for (Letter l : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    if (kept[static_cast<std::size_t>(at[i])] && kept[static_cast<std::size_t>(at[i + 1])]) {
      int index = 0;
      for (std::size_t p = 0; p <= i; ++p) {
        if (kept[static_cast<std::size_t>(at[p])]) ++index;
      }
      out.push_back(l > 0 ? index : -index);
    }
    std::swap(at[i], at[i + 1]);
  }
  return BraidWord(static_cast<int>(keep.size()), std::move(out)).reduced();
}

BraidWord half_twist_word(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw DomainError("half_twist_word: need 1 <= i < j <= n");
  std::vector<Letter> out;
  for (int top = j - 1; top >= i; --top) {
    for (int k = i; k <= top; ++k) out.push_back(k);
  }
  return BraidWord(n, std::move(out));
}

}  // namespace sitwist
