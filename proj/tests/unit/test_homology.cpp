#include <doctest.h>

#include "oracles.hpp"
#include "sitwist/error.hpp"
#include "sitwist/homology.hpp"
#include "sitwist/twist.hpp"

using namespace sitwist;

namespace {

LaurentPoly t_pow(int e, long c = 1) { return LaurentPoly::monomial(c, e); }

bool is_identity(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

oracle::cpp_rational trace(const oracle::RatMatrix& m) {
  oracle::cpp_rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i][i];
  return s;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly a = t_pow(-1, 2) + t_pow(0, -1) + t_pow(3);
  const LaurentPoly b = t_pow(1) - t_pow(0);
  CHECK(a.low() == -1);
  CHECK(a.high() == 3);
  CHECK((a - a).is_zero());
  CHECK(a * b == t_pow(0, 2) - t_pow(-1, 2) - t_pow(1) + t_pow(0) + t_pow(4) - t_pow(3));
  CHECK(a.shifted(2) == a * t_pow(2));
  CHECK(a.evaluate(BigInt(-1)) == -2 - 1 - 1);
  CHECK(to_string(LaurentPoly()) == "0");
}

TEST_CASE("unreduced Burau generators") {
  CHECK(burau_unreduced(BraidWord(3)) == LaurentMatrix::identity(3));
  const LaurentMatrix s = burau_unreduced(BraidWord::generator(2, 1));
  CHECK(s.at(0, 0) == LaurentPoly(1) - t_pow(1));
  CHECK(s.at(0, 1) == t_pow(1));
  CHECK(s.at(1, 0) == LaurentPoly(1));
  CHECK(s.at(1, 1).is_zero());
}

TEST_CASE("Burau matches the rational oracle") {
  const BraidWord w = parse_word("1 -2 3 3 -1 2 -3 1 2", 4);
  for (const oracle::cpp_rational t : {oracle::cpp_rational(3), oracle::cpp_rational(-1, 2), oracle::cpp_rational(-1)}) {
    CHECK(oracle::evaluate(burau_unreduced(w), t) == oracle::burau_at(w, t));
    // The unreduced form is the reduced one plus a trivial summand.
    CHECK(trace(oracle::evaluate(burau_unreduced(w), t)) == 1 + trace(oracle::evaluate(burau_reduced(w), t)));
  }
}

TEST_CASE("determinant is (-t)^e") {
  for (const char* text : {"", "1", "-2", "1 2 -1 3 3", "-1 -2 -3 2"}) {
    const BraidWord w = parse_word(text, 4);
    const long e = exponent_sum(w);
    const LaurentPoly want = t_pow(static_cast<int>(e), e % 2 == 0 ? 1 : -1);
    CHECK(determinant(burau_unreduced(w)) == want);
    CHECK(determinant(burau_reduced(w)) == want);
  }
}

TEST_CASE("reduced Burau and evaluation") {
  CHECK(is_identity(evaluate_at(LaurentMatrix::identity(4), -1)));
  // In B2 the reduced representation is sigma_1 -> (-t).
  const LaurentMatrix r = burau_reduced(BraidWord::generator(2, 1));
  CHECK(r.dim() == 1);
  CHECK(r.at(0, 0) == t_pow(1, -1));
  const IntMatrix sq = evaluate_at(burau_reduced(parse_word("1 1", 2)), -1);
  CHECK(sq == IntMatrix{{1}});
  CHECK_THROWS_AS(evaluate_at(r, 0), DomainError);
  CHECK_THROWS_AS(evaluate_at(burau_reduced(parse_word("-1", 2)), 2), DomainError);
  const BraidWord a = parse_word("1 2 -1", 3);
  const BraidWord b = parse_word("2 2 -1", 3);
  CHECK(burau_reduced(compose(a, b)) == burau_reduced(a) * burau_reduced(b));
}

// In the double cover a twist about a curve around two punctures lifts to a
// twist about a nonseparating curve, which acts nontrivially on homology; the
// square of the twist about three punctures lifts to a separating twist.
TEST_CASE("Torelli shadows") {
  CHECK(is_torelli_shadow(BraidWord(5)));
  CHECK_FALSE(is_torelli_shadow(BraidWord::generator(3, 1)));
  CHECK_FALSE(is_torelli_shadow(parse_word("1 1", 3)));
  CHECK_FALSE(is_torelli_shadow(full_twist_word(5, 2, 4)));
  CHECK(is_torelli_shadow(power(full_twist_word(5, 2, 4), 2)));
  CHECK(is_torelli_shadow(bh_twist_image(CurveSpec(7, 1, 5, parse_word("5 -6 2", 7)))));
  // A commutator of half twists about arcs meeting in one endpoint.
  CHECK_FALSE(is_torelli_shadow(commutator(BraidWord::generator(3, 1), BraidWord::generator(3, 2))));
}

}  // TEST_SUITE
