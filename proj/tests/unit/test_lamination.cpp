#include <doctest.h>

#include "oracles.hpp"
#include "sitwist/error.hpp"
#include "sitwist/lamination.hpp"
#include "sitwist/twist.hpp"

using namespace sitwist;

namespace {

LoopCoordinates coords(int n, std::vector<int> a, std::vector<int> b) {
  return LoopCoordinates(n, std::vector<BigInt>(a.begin(), a.end()), std::vector<BigInt>(b.begin(), b.end()));
}

}  // namespace

TEST_SUITE("lamination") {

// Counting crossings of a small circle around punctures 1, 2 in the
// three-punctured disk: it meets the ray above puncture 2 once and the ray
// below once, so a = 0; it meets the vertical between punctures 1 and 2
// twice and misses the one between 2 and 3, so b = (2 - 0) / 2 = 1.
TEST_CASE("round curves") {
  CHECK(round_curve(3, 1, 2) == coords(3, {0}, {1}));
  CHECK(round_curve(3, 2, 3) == coords(3, {0}, {-1}));
  CHECK(round_curve(5, 1, 5).is_boundary_parallel());
  CHECK_FALSE(curves_equal(round_curve(7, 1, 3), round_curve(7, 5, 7)));
  CHECK_THROWS_AS(round_curve(5, 3, 3), DomainError);
  CHECK_THROWS_AS(round_curve(5, 0, 2), DomainError);
  CHECK_THROWS_AS(round_curve(5, 2, 6), DomainError);
  CHECK_THROWS_AS(round_curve(2, 1, 2), DomainError);
  CHECK_THROWS_AS(coords(4, {0, 0}, {0, 0}), DomainError);
  CHECK_THROWS_AS(coords(4, {0}, {0, 1}), DomainError);
}

TEST_CASE("the boundary curve is fixed by every generator") {
  const LoopCoordinates z = round_curve(5, 1, 5);
  for (int i = 1; i <= 4; ++i) {
    CHECK(apply_generator(z, i, 1) == z);
    CHECK(apply_generator(z, i, -1) == z);
  }
}

// Under the counterclockwise convention sigma_1 carries puncture 2 over the
// top to position 1, so the image of the circle around {2, 3} is a curve
// around {1, 3} passing above puncture 2. It meets the upper ray at puncture
// 2 twice and the lower ray not at all (a = 1) and meets each vertical
// twice (b = 0). The mirror convention would give a = -1.
TEST_CASE("handedness calibration") {
  CHECK(apply_generator(round_curve(3, 2, 3), 1, 1) == coords(3, {1}, {0}));
  CHECK(apply_generator(round_curve(3, 2, 3), 1, -1) == coords(3, {-1}, {0}));
}

TEST_CASE("generator action basics") {
  const LoopCoordinates c12 = round_curve(3, 1, 2);
  CHECK(apply_generator(c12, 1, 1) == c12);
  CHECK(apply_generator(c12, 1, -1) == c12);
  const LoopCoordinates c = coords(5, {3, -2, 1}, {-4, 0, 2});
  for (int i = 1; i <= 4; ++i) {
    CHECK(apply_generator(apply_generator(c, i, 1), i, -1) == c);
    CHECK(apply_generator(apply_generator(c, i, -1), i, 1) == c);
  }
  CHECK_THROWS_AS(apply_generator(c, 5, 1), DomainError);
  CHECK_THROWS_AS(apply_generator(c, 0, 1), DomainError);
}

TEST_CASE("braid action") {
  const LoopCoordinates c = round_curve(7, 2, 4);
  CHECK(apply_braid(c, BraidWord(7)) == c);
  CHECK(apply_braid(c, full_twist_word(7, 2, 4)) == c);
  CHECK(apply_braid(c, full_twist_word(7, 5, 7)) == c);
  CHECK_FALSE(apply_braid(c, full_twist_word(7, 3, 5)) == c);
  CHECK(apply_braid(round_curve(5, 2, 4), full_twist_word(5, 2, 4)) == round_curve(5, 2, 4));
  CHECK_THROWS_AS(apply_braid(c, BraidWord(5, {1})), DomainError);
}

TEST_CASE("curve images agree with the Artin action on boundary loops") {
  const std::vector<BraidWord> words = {
      parse_word("1 2 -3 4", 5), parse_word("2 2 -1 3 -4 -4 2", 5), parse_word("-3 -2 -1 4 3", 5),
      full_twist_word(5, 1, 3), parse_word("4 4 4 -2 1 1", 5)};
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      if (i == 1 && j == 5) continue;
      for (const auto& u : words) {
        for (const auto& v : words) {
          const bool same = curves_equal(apply_braid(round_curve(5, i, j), u), apply_braid(round_curve(5, i, j), v));
          CHECK(same == (oracle::disk_class(CurveSpec(5, i, j, u)) == oracle::disk_class(CurveSpec(5, i, j, v))));
        }
      }
    }
  }
}

TEST_CASE("norm and growth bound") {
  CHECK(norm(round_curve(5, 2, 3)) == 2);
  CHECK(norm(coords(4, {3, -2}, {0, 1})) == 6);
  const LoopCoordinates c = round_curve(6, 2, 4);
  const BraidWord w = parse_word("1 2 3 4 5 -1 -2 -3 2 2 1 5 5 4", 6);
  BigInt bound = norm(c);
  for (std::size_t k = 0; k < w.length(); ++k) bound *= 2;
  CHECK(norm(apply_braid(c, w)) <= bound);
  CHECK_FALSE(curves_equal(round_curve(5, 1, 2), round_curve(5, 2, 3)));
}

TEST_CASE("long words stay exact") {
  // Coordinates grow exponentially under a pseudo-Anosov word; 64-bit
  // integers would overflow well before this length.
  const BraidWord pa = parse_word("1 -2", 3);
  LoopCoordinates c = round_curve(3, 1, 2);
  for (int k = 0; k < 300; ++k) c = apply_braid(c, pa);
  CHECK(norm(c) > BigInt(1) << 200);
  for (int k = 0; k < 300; ++k) c = apply_braid(c, inverse(pa));
  CHECK(c == round_curve(3, 1, 2));
}

}  // TEST_SUITE
