#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sitwist {

// A braid generator occurrence: +i is sigma_i, -i is sigma_i^{-1}.
using Letter = int;

// A word in the Artin generators of the braid group on `strands()` strands.
//
// Letters are stored in chronological order: the first letter is applied
// first. Products written in functional (right-to-left) notation, such as
// T_a T_b, therefore become "word(T_b) then word(T_a)"; use `compose` or
// `operator*` to transcribe them and `then` for chronological concatenation.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  static BraidWord generator(int strands, int index, int sign = 1);

  int strands() const noexcept { return strands_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Cancels adjacent inverse pairs.
  BraidWord reduced() const;

  // Literal (letter-by-letter) equality. Group equality is `equals`.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  // Image of the point k (1-based).
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> images() const noexcept { return images_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;

  // (p * q)(k) = p(q(k)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Symmetric matrix of pairwise linking numbers of a pure braid; the diagonal
// is zero.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int n);
  int size() const noexcept { return n_; }
  long at(int i, int j) const;
  void add(int i, int j, long delta);
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  int n_;
  std::vector<long> entries_;
};

BraidWord parse_word(std::string_view text, int strands);
std::string to_string(const BraidWord& w);

// Chronological concatenation: all of `first`, then all of `second`.
BraidWord then(const BraidWord& first, const BraidWord& second);
// Functional product a*b: b is applied first.
BraidWord compose(const BraidWord& a, const BraidWord& b);
inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return compose(a, b); }
BraidWord inverse(const BraidWord& a);
BraidWord power(const BraidWord& a, int k);
// g a g^{-1}
BraidWord conjugate(const BraidWord& a, const BraidWord& g);
// a b a^{-1} b^{-1}
BraidWord commutator(const BraidWord& a, const BraidWord& b);
// The image under the automorphism sigma_i -> sigma_i^{-1}.
BraidWord mirror(const BraidWord& a);

long exponent_sum(const BraidWord& a);
Permutation underlying_permutation(const BraidWord& a);
bool is_pure(const BraidWord& a);
LinkingMatrix linking_matrix(const BraidWord& a);
// Deletes every strand not listed in `keep` (strictly increasing, 1-based).
BraidWord forget_strands(const BraidWord& a, std::span<const int> keep);

// Positive half twist on strands i..j.
BraidWord half_twist_word(int n, int i, int j);

struct EqualityOptions {
  // Extra braids whose images of the round curves are also tested. Empty
  // means the default set {Delta, sigma_1}.
  std::vector<BraidWord> conjugators;
};

// Decides a == b in B_n. d = a b^{-1} must have zero exponent sum and fix
// every round curve together with its images under the conjugating set.
bool equals(const BraidWord& a, const BraidWord& b, const EqualityOptions& options = {});
// True iff a is trivial in B_n.
bool is_trivial(const BraidWord& a, const EqualityOptions& options = {});

}  // namespace sitwist
