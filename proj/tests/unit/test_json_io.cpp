#include <doctest.h>

#include "sitwist/error.hpp"
#include "sitwist/homology.hpp"
#include "sitwist/json_io.hpp"
#include "sitwist/lamination.hpp"

using namespace sitwist;

TEST_SUITE("json_io") {

TEST_CASE("braid words") {
  const BraidWord w = parse_word("1 -3 2", 4);
  const Json j = to_json(w);
  CHECK(j == Json::parse(R"({"strands": 4, "word": [1, -3, 2]})"));
  CHECK(braid_from_json(j) == w);
  CHECK_THROWS_AS(braid_from_json(Json::parse(R"({"strands": 3, "word": [3]})")), ParseError);
  CHECK_THROWS_AS(braid_from_json(Json::parse(R"({"word": [1]})")), ParseError);
  CHECK_THROWS_AS(braid_from_json(Json::parse(R"({"strands": 3, "word": "1 2"})")), ParseError);
}

TEST_CASE("free words") {
  const FreeWord w = parse_free_word("x1 x3^-1", 3);
  CHECK(to_json(w) == Json::parse(R"({"rank": 3, "word": [1, -3]})"));
  CHECK(free_word_from_json(to_json(w)) == w);
}

TEST_CASE("loop coordinates, including entries beyond 64 bits") {
  const LoopCoordinates c = round_curve(5, 2, 3);
  CHECK(to_json(c) == Json::parse(R"({"punctures": 5, "a": [0, 0, 0], "b": [-1, 1, 0]})"));
  CHECK(loop_from_json(to_json(c)) == c);

  const BigInt big = BigInt(1) << 100;
  const LoopCoordinates large(4, {big, -big}, {BigInt(3), BigInt(0)});
  const Json j = to_json(large);
  CHECK(j["a"][0].is_string());
  CHECK(loop_from_json(j) == large);

  const LoopCoordinates z = LoopCoordinates::boundary_parallel(6);
  CHECK(loop_from_json(to_json(z)) == z);
  CHECK_THROWS_AS(loop_from_json(Json::parse(R"({"punctures": 4, "a": [0, 0], "b": [0, 0]})")), ParseError);
  CHECK_THROWS_AS(loop_from_json(Json::parse(R"({"punctures": 4, "a": ["x", 0], "b": [0, 1]})")), ParseError);
}

TEST_CASE("curve and arc specs") {
  const CurveSpec c(6, 2, 4, parse_word("1 5", 6));
  CHECK(curve_from_json(to_json(c)) == c);
  const ArcSpec a(6, 3, parse_word("-2", 6));
  CHECK(arc_from_json(to_json(a)) == a);
  CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"punctures": 6, "base": [2, 4], "prep": {"strands": 6, "word": []}})")),
                  ParseError);
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"punctures": 6, "base": [2, 4], "prep": {"strands": 5, "word": []}})")),
                  ParseError);
}

TEST_CASE("matrices") {
  const LaurentMatrix m = burau_unreduced(parse_word("1 -2", 3));
  CHECK(laurent_from_json(to_json(m)) == m);
  CHECK(to_json(evaluate_at(LaurentMatrix::identity(2), -1)) == Json::parse("[[1, 0], [0, 1]]"));
}

}  // TEST_SUITE
