#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sitwist/braid.hpp"

namespace sitwist {

// A word in the free group on x_1..x_rank. Letters read left to right, the
// order used for loops in a fundamental group: x_1 x_2 traverses x_1 first.
// Words are kept as written; `fg_reduce` produces the normal form.
class FreeWord {
 public:
  explicit FreeWord(int rank);
  FreeWord(int rank, std::vector<int> letters);

  static FreeWord generator(int rank, int index, int sign = 1);

  int rank() const noexcept { return rank_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<int> letters_;
};

FreeWord fg_reduce(const FreeWord& w);
bool fg_equal(const FreeWord& u, const FreeWord& v);
// Concatenation u then v.
FreeWord fg_multiply(const FreeWord& u, const FreeWord& v);
inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return fg_multiply(u, v); }
FreeWord fg_inverse(const FreeWord& w);
FreeWord fg_power(const FreeWord& w, int k);
// u v u^{-1} v^{-1}
FreeWord fg_commutator(const FreeWord& u, const FreeWord& v);
// g w g^{-1}
FreeWord fg_conjugate(const FreeWord& w, const FreeWord& g);

// x [y,z] x^{-1} [x,z], equal to [xy, z].
FreeWord witt_hall_expand_left(const FreeWord& x, const FreeWord& y, const FreeWord& z);
// [x,y] y [x,z] y^{-1}, equal to [x, yz].
FreeWord witt_hall_expand_right(const FreeWord& x, const FreeWord& y, const FreeWord& z);
// (x[x,y]x^{-1}) ((xy)[x,y](xy)^{-1}) [x,y] (y[x,y]y^{-1}), equal to [x^2, y^2].
FreeWord square_commutator_expansion(const FreeWord& x, const FreeWord& y);

bool verify_word_identity(const FreeWord& lhs, const FreeWord& rhs);

// Text form: "x1 x3^-1 x2"; the empty string is the identity.
FreeWord parse_free_word(std::string_view text, int rank);
std::string to_string(const FreeWord& w);

// Least rotation of the cyclically reduced word or its inverse; a complete
// invariant of the unoriented conjugacy class.
std::vector<int> cyclic_normal_form(const FreeWord& w);

// Artin's action of B_n on the free group F_n = pi_1 of the punctured disk:
// sigma_i sends x_i -> x_i x_{i+1} x_i^{-1} and x_{i+1} -> x_i. Letters of
// the braid are applied in chronological order. The action is faithful, so
// comparing the images of all generators solves the word problem
// independently of the lamination coordinates.
FreeWord apply_artin(const FreeWord& w, const BraidWord& b);
bool artin_equal(const BraidWord& a, const BraidWord& b);

}  // namespace sitwist
