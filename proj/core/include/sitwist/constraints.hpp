#pragma once

#include <string>
#include <vector>

#include "sitwist/catalog.hpp"

namespace sitwist {

// Consecutive twists along c2, c1, c4, c3, c6, c5 commute.
Report check_disjointness_chain(const Catalog& c);
// Every curve flagged symmetric-separating encloses an odd count >= 3.
Report check_odd_punctures(const Catalog& c);
// Linking of strands 1, 2 after forgetting the others, for the twists about
// f, f1, f2, f3 and z in B5.
Report check_forgetful_images(const Catalog& c);
// M(f1) = H(f1), M(f2) = H(f2), H(f) = H4(f) in B6.
Report check_curve_equalities(const Catalog& c);
// h = T_n T_m T_n T_o T_n T_m sends u to v and v' to u; the curves obtained
// from the twelve-twist product through h agree with c1..c6.
Report check_h_transport(const Catalog& c);
// The seven-fold conjugator built from the chain a-orig, b-orig, c-orig
// carries the x-orig sextuple onto the x-alt one, and both satisfy the
// genus two relation, in the six-punctured sphere.
Report check_sphere_conjugation(const Catalog& c);
// Point-push words against twist products in B6.
Report check_square_correspondences(const Catalog& c);
Report check_push_correspondences(const Catalog& c);

struct SweepRow {
  int k = 0;
  bool holds = false;
  // Linking of strands 1, 2 in the forgetful image of the right-hand side.
  long image = 0;
};
// The boundary factor of REL-AUX1B-PB5 raised to 2k for k in [lo, hi].
std::vector<SweepRow> boundary_sweep(const Catalog& c, int lo = -3, int hi = 3);
Report check_boundary_sweep(const Catalog& c);

// Six-punctured sphere: capping the disk boundary. Curves are compared by
// the cyclically reduced class of their boundary word in the free group on
// x1..x5, where x6 = (x1 ... x5)^-1.
std::vector<int> sphere_class(const CurveSpec& c);
// g acts trivially on the sphere, i.e. fixes every adjacent round curve.
bool sphere_trivial(const BraidWord& g);

}  // namespace sitwist
