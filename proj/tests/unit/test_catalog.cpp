#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "sitwist/catalog.hpp"
#include "sitwist/constraints.hpp"
#include "sitwist/error.hpp"
#include "sitwist/lamination.hpp"

using namespace sitwist;

namespace {

const Catalog& shipped() {
  static const Catalog c = Catalog::load(oracle::catalog_path());
  return c;
}

Json shipped_json() {
  std::ifstream in(oracle::catalog_path());
  return Json::parse(in);
}

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Json small_catalog() {
  return Json::parse(R"({
    "curves": {
      "a": {"kind": "curve", "punctures": 4, "base": [1, 2], "prep": {"strands": 4, "word": []}},
      "b": {"kind": "curve", "punctures": 4, "base": [3, 4], "prep": {"strands": 4, "word": []}},
      "c": {"from": "a", "ops": [{"by": [{"braid": [2]}]}]},
      "arc": {"kind": "arc", "punctures": 4, "base": [2, 3], "prep": {"strands": 4, "word": [1]}}
    },
    "relations": [
      {"name": "DISJOINT", "ambient": {"type": "braid", "strands": 4}, "source": "test",
       "lhs": [{"twist": "a"}, {"twist": "b"}], "rhs": [{"twist": "b"}, {"twist": "a"}]},
      {"name": "SQUARE", "ambient": {"type": "braid", "strands": 4}, "source": "test",
       "lhs": [{"half": "arc", "power": 2}], "rhs": [{"braid": [-1, 2, 2, 1]}]},
      {"name": "FREE", "ambient": {"type": "free", "rank": 2}, "source": "test",
       "lhs": [{"commutator": [[{"word": "x1"}], [{"word": "x2"}]]}],
       "rhs": [{"word": "x1 x2 x1^-1 x2^-1"}]}
    ]
  })");
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("loading a small catalog") {
  const Catalog c = Catalog::from_json(small_catalog());
  CHECK(c.curves().size() == 4);
  CHECK(c.relations().size() == 3);
  CHECK(c.handedness() == Handedness::standard);
  CHECK(c.curve("c").prep == BraidWord(4, {2}));
  CHECK(c.entry("arc").is_arc());
  CHECK_THROWS_AS(c.curve("arc"), Error);
  CHECK_THROWS_AS(c.arc("a"), Error);
  CHECK_THROWS_AS(c.relation("NOPE"), Error);
  // Relations pass; the constraint suite needs curves this catalog lacks.
  const Summary s = verify_all(c);
  CHECK(s.passed() == 3);
  CHECK(s.failed() == 9);
  for (const auto& r : s.reports) CHECK(r.passed() == (r.subject.rfind("constraint:", 0) != 0));
}

TEST_CASE("dangling names are rejected") {
  Json j = small_catalog();
  j["relations"][0]["lhs"][0]["twist"] = "missing";
  CHECK_THROWS_AS(Catalog::from_json(j), ParseError);

  j = small_catalog();
  j["curves"]["c"]["from"] = "missing";
  CHECK_THROWS_AS(Catalog::from_json(j), ParseError);

  j = small_catalog();
  j["curves"]["a"] = Json::parse(R"({"from": "c"})");
  CHECK_THROWS_AS(Catalog::from_json(j), ParseError);
}

TEST_CASE("schema errors") {
  Json j = small_catalog();
  j["relations"][0]["ambient"]["type"] = "torus";
  CHECK_THROWS_AS(Catalog::from_json(j), ParseError);
  j = small_catalog();
  j["curves"]["a"]["base"] = Json::array({1, 9});
  CHECK_THROWS_AS(Catalog::from_json(j), ParseError);
  j = small_catalog();
  j["relations"][1]["lhs"][0]["power"] = "two";
  CHECK_THROWS_AS(Catalog::from_json(j), ParseError);
  CHECK_THROWS_AS(Catalog::load("/nonexistent/catalog.json"), Error);
}

TEST_CASE("save and load round trip") {
  const auto path = std::filesystem::temp_directory_path() / "sitwist-roundtrip.json";
  shipped().save(path);
  const Catalog again = Catalog::load(path);
  CHECK(again.to_json() == shipped().to_json());
  CHECK(again.curves().size() == shipped().curves().size());
  for (const auto& [name, e] : shipped().curves()) CHECK(again.entry(name).spec == e.spec);
  std::filesystem::remove(path);
}

TEST_CASE("the empty catalog passes vacuously with a warning") {
  const Catalog c = Catalog::from_json(Json::parse(R"({"curves": {}, "relations": []})"));
  const Summary s = verify_all(c);
  CHECK(s.reports.empty());
  CHECK(s.failed() == 0);
  REQUIRE(s.warnings.size() == 1);
}

TEST_CASE("the shipped catalog verifies completely") {
  const Summary s = verify_all(shipped());
  for (const auto& r : s.reports) {
    INFO(to_text(r));
    CHECK(r.passed());
  }
  CHECK(s.failed() == 0);
  CHECK(s.passed() == static_cast<int>(shipped().relations().size()) + 9);
  // Reports come back sorted, whatever order they finished in.
  for (std::size_t k = 1; k < s.reports.size(); ++k) CHECK(s.reports[k - 1].subject < s.reports[k].subject);
  const Summary serial = verify_all(shipped(), false);
  REQUIRE(serial.reports.size() == s.reports.size());
  for (std::size_t k = 0; k < s.reports.size(); ++k) CHECK(to_json(serial.reports[k])["checks"] == to_json(s.reports[k])["checks"]);
}

TEST_CASE("required relations are present") {
  for (const char* name : {"REL-SSIP-B7", "REL-SZSIP-B7", "REL-AUX1B-PB5", "REL-LANTERN", "REL-WH-L", "REL-WH-R",
                           "REL-WH-SQ", "REL-PI1-FIRST", "REL-PI1-SECOND", "REL-12TWIST", "REL-6TWIST-INTERMEDIATE",
                           "REL-AUX1A"}) {
    CHECK_NOTHROW(shipped().relation(name));
  }
}

TEST_CASE("braid relation reports carry every invariant") {
  const Report r = verify_relation(shipped(), shipped().relation("REL-SSIP-B7"));
  for (const char* check : {"equals", "exponent-sum", "permutation", "linking", "burau", "torelli-lhs", "torelli-rhs"}) {
    const Check* c = find_check(r, check);
    REQUIRE_MESSAGE(c != nullptr, check);
    CHECK(c->passed);
  }
  CHECK(r.growth > 0);
  const Report f = verify_relation(shipped(), shipped().relation("REL-WH-L"));
  REQUIRE(find_check(f, "free-equal") != nullptr);
  CHECK(f.growth == 0);
}

TEST_CASE("swapping w and w' breaks the bounding pair relation") {
  Json j = shipped_json();
  std::swap(j["curves"]["w-bar"], j["curves"]["w-bar'"]);
  const Catalog c = Catalog::from_json(j);
  const RelationEntry& e = c.relation("REL-SSIP-B7");
  const Report r = verify_relation(c, e);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(find_check(r, "equals")->passed);
  // The two sides are now inverse to each other.
  CHECK(equals(c.lhs(e), inverse(c.rhs(e))));
}

TEST_CASE("an f3 curve missing puncture 1 fails the forgetful check") {
  Json j = shipped_json();
  j["curves"]["f3-bar"] = Json::parse(
      R"({"kind": "curve", "punctures": 5, "base": [2, 4], "prep": {"strands": 5, "word": []}, "symmetric-separating": true})");
  const Catalog c = Catalog::from_json(j);
  const Report r = check_forgetful_images(c);
  CHECK_FALSE(r.passed());
  const Check* f3 = find_check(r, "f3-bar");
  REQUIRE(f3 != nullptr);
  CHECK_FALSE(f3->passed);
  CHECK(f3->detail == "got 0, expected 1");
}

TEST_CASE("an even symmetric separating curve fails the puncture count") {
  Json j = shipped_json();
  j["curves"]["bad"] = Json::parse(
      R"({"kind": "curve", "punctures": 5, "base": [2, 5], "prep": {"strands": 5, "word": []}, "symmetric-separating": true})");
  const Report r = check_odd_punctures(Catalog::from_json(j));
  CHECK_FALSE(r.passed());
  CHECK_FALSE(find_check(r, "bad")->passed);
}

TEST_CASE("the boundary sweep singles out k = -1") {
  const auto rows = boundary_sweep(shipped());
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) {
    CHECK(row.holds == (row.k == -1));
    CHECK(row.image == 2 + 2 * row.k);
  }
}

TEST_CASE("constraint reports fail cleanly when curves are missing") {
  const Catalog c = Catalog::from_json(small_catalog());
  const Report r = check_curve_equalities(c);
  CHECK_FALSE(r.passed());
  CHECK(r.checks.front().name == "setup");
}

TEST_CASE("curve equalities agree with the Artin-action oracle") {
  const Catalog& c = shipped();
  const BraidWord H = then(inverse(c.twist("s3-bar@B6")), c.twist("s4-bar@B6"));
  const BraidWord M = inverse(c.half("m-arc@B6"));
  for (const char* name : {"f1-bar@B6", "f2-bar@B6"}) {
    const CurveSpec f = c.curve(name);
    CHECK(oracle::disk_class(transport(f, M)) == oracle::disk_class(transport(f, H)));
  }
  const CurveSpec f = c.curve("f-bar@B6");
  CHECK(oracle::disk_class(transport(f, H)) == oracle::disk_class(transport(f, c.twist("s4-bar@B6"))));
  // And M differs from H on f itself, so the checks are not vacuous.
  CHECK(oracle::disk_class(transport(f, M)) != oracle::disk_class(transport(f, H)));
}

TEST_CASE("push generators lift to inverse twists about s_i") {
  for (int i = 1; i <= 5; ++i) {
    const std::string s = "s" + std::to_string(i) + "-bar@B6";
    CHECK(equals(shipped().push(FreeWord::generator(5, i)), inverse(shipped().twist(s))));
  }
}

TEST_CASE("sphere classes") {
  // Capping the boundary identifies the curve around 1..k with the one
  // around k+1..n.
  CHECK(sphere_class(CurveSpec(6, 1, 2)) == sphere_class(CurveSpec(6, 3, 6)));
  CHECK(sphere_class(CurveSpec(6, 1, 2)) != sphere_class(CurveSpec(6, 2, 3)));
  CHECK(sphere_trivial(full_twist_word(6, 1, 6)));
  CHECK_FALSE(full_twist_word(6, 1, 6).empty());
  CHECK_FALSE(sphere_trivial(full_twist_word(6, 1, 3)));
}

TEST_CASE("mirroring") {
  const Catalog m = mirror(shipped());
  CHECK(m.handedness() == Handedness::mirrored);
  CHECK(m.orientation() == -1);
  CHECK(mirror(m).to_json() == shipped().to_json());
  CHECK(m.arc("x-bar").prep == mirror(shipped().arc("x-bar").prep));
  const Summary s = verify_all(m);
  CHECK(s.failed() == 0);
  const Catalog file = Catalog::load(oracle::mirrored_catalog_path());
  CHECK(file.to_json() == m.to_json());
}

}  // TEST_SUITE
