#pragma once

#include <span>
#include <vector>

#include "sitwist/bigint.hpp"
#include "sitwist/braid.hpp"

namespace sitwist {

// Integral lamination (Dynnikov) coordinates of a multicurve in the disk
// with n punctures on a horizontal line.
//
// For k = 1..n-2, with alpha arcs running vertically from puncture k+1 to
// the boundary and beta arcs running vertically between punctures k and k+1:
//   a_k = (#above(k+1) - #below(k+1)) / 2,   b_k = (beta_k - beta_{k+1}) / 2.
// The coordinates are a bijection between essential multicurves and the
// nonzero vectors of Z^{2n-4}. The boundary-parallel curve has no
// coordinates of its own; it is carried as a flagged zero vector.
class LoopCoordinates {
 public:
  LoopCoordinates(int punctures, std::vector<BigInt> a, std::vector<BigInt> b);
  static LoopCoordinates boundary_parallel(int punctures);

  int punctures() const noexcept { return punctures_; }
  std::span<const BigInt> a() const noexcept { return a_; }
  std::span<const BigInt> b() const noexcept { return b_; }
  bool is_boundary_parallel() const noexcept { return boundary_; }

  friend bool operator==(const LoopCoordinates&, const LoopCoordinates&) = default;

 private:
  LoopCoordinates() = default;
  friend LoopCoordinates apply_generator(const LoopCoordinates&, int, int);
  friend LoopCoordinates apply_braid(const LoopCoordinates&, const BraidWord&);
  friend void apply_in_place(LoopCoordinates&, Letter);

  int punctures_ = 0;
  bool boundary_ = false;
  std::vector<BigInt> a_;
  std::vector<BigInt> b_;
};

// Curve enclosing exactly the punctures i..j, drawn as a round circle.
LoopCoordinates round_curve(int n, int i, int j);
LoopCoordinates apply_generator(const LoopCoordinates& c, int index, int sign);
// Fold of apply_generator over the letters of w in chronological order.
LoopCoordinates apply_braid(const LoopCoordinates& c, const BraidWord& w);
void apply_in_place(LoopCoordinates& c, Letter letter);
bool curves_equal(const LoopCoordinates& x, const LoopCoordinates& y);
// Sum of absolute values of the coordinates.
BigInt norm(const LoopCoordinates& c);

}  // namespace sitwist
