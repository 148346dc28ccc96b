#pragma once

#include "sitwist/braid.hpp"
#include "sitwist/free_group.hpp"
#include "sitwist/lamination.hpp"

namespace sitwist {

// A simple closed curve in the n-punctured disk, given as the image
// prep(round(first, last)) of a round curve under a braid.
struct CurveSpec {
  int punctures = 0;
  int first = 1;
  int last = 2;
  BraidWord prep;

  CurveSpec() = default;
  CurveSpec(int n, int i, int j, BraidWord prep_word = {});

  int enclosed() const noexcept { return last - first + 1; }
  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

// An arc prep(segment from `left` to `left + 1`).
struct ArcSpec {
  int punctures = 0;
  int left = 1;
  BraidWord prep;

  ArcSpec() = default;
  ArcSpec(int n, int i, BraidWord prep_word = {});

  friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
};

// (sigma_i ... sigma_{j-1})^{j-i+1}: the positive Dehn twist about round(i, j).
BraidWord full_twist_word(int n, int i, int j);

LoopCoordinates realize(const CurveSpec& c);
// The curve bounding a regular neighbourhood of the arc.
CurveSpec arc_boundary(const ArcSpec& a);

// g(c): the same curve with g applied after the prep.
CurveSpec transport(const CurveSpec& c, const BraidWord& g);
ArcSpec transport(const ArcSpec& a, const BraidWord& g);

BraidWord dehn_twist(const CurveSpec& c);
BraidWord half_twist(const ArcSpec& a);

// Braid image of a Dehn twist about a symmetric separating curve of the
// double cover: the square of the twist about its quotient, which must
// enclose an odd number (at least 3) of punctures.
BraidWord bh_twist_image(const CurveSpec& c);

enum class BasePosition { leftmost, rightmost };

// Point-push of the extra marked point p along a loop in pi_1 of the disk
// with n = w.rank() punctures; the result lives in B_{n+1}. Loops are read
// left to right and pushing reverses order:
//   push_loop(u v) = push_loop(v) * push_loop(u)   (functional product).
// Each generator x_i is sent to the negative twist about the curve s_i
// around {i, p} that passes below the punctures between them, and
// x_n ... x_2 x_1 is the loop parallel to the boundary.
BraidWord push_loop(const FreeWord& w, BasePosition base = BasePosition::rightmost);
// The curve s_i enclosing puncture i and p (p rightmost).
CurveSpec push_curve(int n, int i);

// Replaces the strand that starts at position `strand` by two parallel
// strands; the result has one more strand. Crossing signs are kept.
BraidWord cable_strand(const BraidWord& w, int strand);
// Image of a curve under the same doubling, with `strand` the position that
// the doubled strand occupies in the picture of the curve.
CurveSpec cable_curve(const CurveSpec& c, int strand);
ArcSpec cable_arc(const ArcSpec& a, int strand);

}  // namespace sitwist
