#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sitwist/json_io.hpp"

namespace sitwist {

// A catalog written with every generator sign inverted is "mirrored"; its
// words are compiled with mirrored twist, half-twist and push generators.
enum class Handedness { standard, mirrored };

struct CatalogCurve {
  std::string name;
  std::variant<CurveSpec, ArcSpec> spec;
  // Quotient of a symmetric separating curve: must enclose an odd number
  // (at least 3) of punctures.
  bool symmetric_separating = false;

  bool is_arc() const noexcept { return std::holds_alternative<ArcSpec>(spec); }
  int punctures() const;
};

enum class Ambient { braid, free };

struct RelationEntry {
  std::string name;
  Ambient ambient = Ambient::braid;
  // Strand count for braid relations, rank for free ones.
  int size = 0;
  std::string source;
  std::string display;
  std::vector<std::string> tags;
  // Factor lists: chronological for braids, left to right for free words.
  Json lhs;
  Json rhs;

  bool has_tag(std::string_view tag) const;
};

// Named curves and relations. A curve is an explicit spec or {"from": name},
// optionally followed by a chain of operations
//   "ops": [{"by": [factors]}, {"cable": s}, {"embed": n}]
//
// Braid factors, each with an optional integer "power" (default 1):
//   {"twist": curve}        dehn_twist
//   {"half": arc}           half_twist
//   {"bh": curve}           bh_twist_image (the square of the twist)
//   {"push": "x2 x1"}       push_loop on strands-1 punctures
//   {"braid": [letters]}
//   {"commutator": [[factors], [factors]]}
// A twist, half or bh factor may carry "by": [factors]; its support is then
// transported by that braid first.
//
// Free factors: {"word": "x1 x2^-1"}, {"commutator": [[...], [...]]},
// {"conj": [[g...], [w...]]} meaning g w g^-1.
class Catalog {
 public:
  Catalog() = default;
  static Catalog from_json(const Json& j);
  static Catalog load(const std::filesystem::path& path);
  Json to_json() const { return raw_; }
  void save(const std::filesystem::path& path) const;

  Handedness handedness() const noexcept { return handedness_; }
  // +1 or -1; the sign picked up by linking numbers and exponent sums.
  int orientation() const noexcept { return handedness_ == Handedness::standard ? 1 : -1; }

  const std::map<std::string, CatalogCurve>& curves() const noexcept { return curves_; }
  const CatalogCurve& entry(const std::string& name) const;
  const CurveSpec& curve(const std::string& name) const;
  const ArcSpec& arc(const std::string& name) const;

  const std::vector<RelationEntry>& relations() const noexcept { return relations_; }
  const RelationEntry& relation(const std::string& name) const;

  // Generators with this catalog's handedness.
  BraidWord twist(const CurveSpec& c) const;
  BraidWord half(const ArcSpec& a) const;
  BraidWord bh(const CurveSpec& c) const;
  BraidWord push(const FreeWord& w) const;
  BraidWord twist(const std::string& name) const { return twist(curve(name)); }
  BraidWord half(const std::string& name) const { return half(arc(name)); }

  BraidWord compile(const Json& factors, int strands) const;
  FreeWord compile_free(const Json& factors, int rank) const;
  BraidWord lhs(const RelationEntry& e) const { return compile(e.lhs, e.size); }
  BraidWord rhs(const RelationEntry& e) const { return compile(e.rhs, e.size); }

 private:
  void resolve(const std::string& name, const Json& defs, std::vector<std::string>& stack);
  void apply_op(std::variant<CurveSpec, ArcSpec>& spec, const Json& op, const std::string& name) const;
  BraidWord compile_factor(const Json& f, int strands) const;
  FreeWord compile_free_factor(const Json& f, int rank) const;

  Json raw_ = Json::object();
  Handedness handedness_ = Handedness::standard;
  std::map<std::string, CatalogCurve> curves_;
  std::vector<RelationEntry> relations_;
};

// The same catalog with every stored generator sign inverted and the
// handedness flag flipped.
Catalog mirror(const Catalog& c);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  double seconds = 0;
  // Largest norm among the images of the adjacent round curves under the
  // left-hand side; 0 for free relations.
  BigInt growth = 0;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};

struct Summary {
  std::vector<Report> reports;
  std::vector<std::string> warnings;
  double seconds = 0;

  int passed() const;
  int failed() const;
};

Report verify_relation(const Catalog& c, const RelationEntry& e);
// One report per constraint; see constraints.hpp for the individual checks.
std::vector<Report> verify_constraints(const Catalog& c);
// Relations and constraints; reports are sorted by subject.
Summary verify_all(const Catalog& c, bool parallel = true);

Json to_json(const Check& c);
Json to_json(const Report& r);
Json to_json(const Summary& s);
std::string to_text(const Report& r);
std::string to_text(const Summary& s);

}  // namespace sitwist
