#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "sitwist/catalog.hpp"
#include "sitwist/constraints.hpp"
#include "sitwist/error.hpp"
#include "sitwist/properties.hpp"

using namespace sitwist;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string catalog;
  std::string format = "text";
  bool serial = false;
};

std::filesystem::path catalog_path(const Options& o) {
  if (!o.catalog.empty()) return o.catalog;
  if (const char* env = std::getenv("SITWIST_CATALOG"); env != nullptr && *env != '\0') return env;
  if (std::filesystem::exists(SITWIST_DEFAULT_CATALOG)) return SITWIST_DEFAULT_CATALOG;
  return SITWIST_INSTALLED_CATALOG;
}

// Strand count of a braid text when none is given: one more than the
// largest generator index, and at least 2.
int infer_strands(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int n = 2;
  while (in >> tok) {
    try {
      n = std::max(n, std::abs(std::stoi(tok)) + 1);
    } catch (const std::exception&) {
      throw ParseError("malformed braid token '" + tok + "'");
    }
  }
  return n;
}

BraidWord read_braid(const std::string& text, int strands) {
  return parse_word(text, strands > 0 ? strands : infer_strands(text));
}

// "round:i,j@n", a JSON coordinate object, or a catalog curve name.
LoopCoordinates read_curve(const std::string& text, const Options& o) {
  if (text.rfind("round:", 0) == 0) {
    int i = 0, j = 0, n = 0;
    char comma = 0, at = 0;
    std::istringstream in(text.substr(6));
    if (!(in >> i >> comma >> j >> at >> n) || comma != ',' || at != '@' || !in.eof()) {
      throw ParseError("expected round:i,j@n, got '" + text + "'");
    }
    try {
      return round_curve(n, i, j);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (!text.empty() && text.front() == '{') {
    try {
      return loop_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(e.what());
    }
  }
  const Catalog c = Catalog::load(catalog_path(o));
  try {
    return realize(c.curve(text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string coords_text(const LoopCoordinates& c) {
  if (c.is_boundary_parallel()) return "boundary";
  std::string out = "a:";
  for (const auto& x : c.a()) out += " " + x.str();
  out += "  b:";
  for (const auto& x : c.b()) out += " " + x.str();
  return out;
}

std::string matrix_text(const LaurentMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    for (int k = 0; k < m.dim(); ++k) out += (k ? "\t" : "") + to_string(m.at(i, k));
    out += '\n';
  }
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + row[k].str();
    out += '\n';
  }
  return out;
}

int cmd_verify(const Options& o, const std::vector<std::string>& names, bool all) {
  const Catalog c = Catalog::load(catalog_path(o));
  Summary s;
  if (all || names.empty()) {
    s = verify_all(c, !o.serial);
  } else {
    std::vector<Report> constraints;
    for (const auto& name : names) {
      if (name.rfind("constraint:", 0) == 0) {
        if (constraints.empty()) constraints = verify_constraints(c);
        auto it = std::find_if(constraints.begin(), constraints.end(),
                               [&](const Report& r) { return r.subject == name; });
        if (it == constraints.end()) throw ParseError("no constraint named '" + name + "'");
        s.reports.push_back(*it);
      } else {
        try {
          s.reports.push_back(verify_relation(c, c.relation(name)));
        } catch (const DomainError& e) {
          throw ParseError(e.what());
        }
      }
    }
    std::sort(s.reports.begin(), s.reports.end(),
              [](const Report& a, const Report& b) { return a.subject < b.subject; });
  }
  if (o.format == "json") {
    std::cout << to_json(s).dump(2) << '\n';
  } else {
    std::cout << to_text(s);
  }
  return s.failed() == 0 ? 0 : kFailure;
}

int cmd_apply(const Options& o, const std::string& braid, const std::string& curve) {
  const LoopCoordinates c = read_curve(curve, o);
  const LoopCoordinates image = apply_braid(c, read_braid(braid, c.punctures()));
  if (o.format == "json") {
    Json j = to_json(image);
    j["norm"] = norm(image).str();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << coords_text(image) << "\nnorm: " << norm(image).str() << '\n';
  }
  return 0;
}

int cmd_burau(const Options& o, const std::string& braid, int strands, bool reduced, std::optional<long> at) {
  const BraidWord w = read_braid(braid, strands);
  const LaurentMatrix m = reduced ? burau_reduced(w) : burau_unreduced(w);
  if (at) {
    const IntMatrix v = evaluate_at(m, *at);
    std::cout << (o.format == "json" ? to_json(v).dump() + "\n" : matrix_text(v));
  } else {
    std::cout << (o.format == "json" ? to_json(m).dump() + "\n" : matrix_text(m));
  }
  return 0;
}

int cmd_forget(const Options& o, const std::string& braid, int strands, const std::vector<int>& keep) {
  const BraidWord w = read_braid(braid, strands);
  BraidWord out(1);
  try {
    out = forget_strands(w, keep);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (o.format == "json") {
    Json j = to_json(out);
    j["exponent_sum"] = exponent_sum(out);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_string(out) << "\nexponent sum: " << exponent_sum(out) << '\n';
  }
  return 0;
}

int cmd_compile(const Options& o, const std::string& name, bool plain) {
  const Catalog c = Catalog::load(catalog_path(o));
  BraidWord w(1);
  try {
    const CatalogCurve& e = c.entry(name);
    if (e.is_arc()) {
      w = c.half(std::get<ArcSpec>(e.spec));
    } else if (e.symmetric_separating && !plain) {
      w = c.bh(std::get<CurveSpec>(e.spec));
    } else {
      w = c.twist(std::get<CurveSpec>(e.spec));
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (o.format == "json") {
    std::cout << to_json(w).dump() << '\n';
  } else {
    std::cout << to_string(w) << '\n';
  }
  return 0;
}

int cmd_catalog(const Options& o, const std::string& mirror_to) {
  const Catalog c = Catalog::load(catalog_path(o));
  if (!mirror_to.empty()) {
    mirror(c).save(mirror_to);
    return 0;
  }
  if (o.format == "json") {
    Json j{{"relations", Json::array()}, {"curves", Json::array()}};
    std::vector<const RelationEntry*> rels;
    for (const auto& r : c.relations()) rels.push_back(&r);
    std::sort(rels.begin(), rels.end(), [](auto* a, auto* b) { return a->name < b->name; });
    for (const auto* r : rels) j["relations"].push_back({{"name", r->name}, {"source", r->source}, {"display", r->display}});
    for (const auto& [name, e] : c.curves()) j["curves"].push_back(name);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::vector<const RelationEntry*> rels;
  for (const auto& r : c.relations()) rels.push_back(&r);
  std::sort(rels.begin(), rels.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const auto* r : rels) {
    std::cout << r->name << "  [" << (r->ambient == Ambient::braid ? "B" : "F") << r->size << "]  " << r->source
              << "\n    " << r->display << '\n';
  }
  std::cout << c.curves().size() << " curves:";
  for (const auto& [name, e] : c.curves()) std::cout << ' ' << name;
  std::cout << '\n';
  return 0;
}

int cmd_properties(const Options& o, const std::vector<std::string>& suites, const PropertyOptions& p) {
  const Catalog c = Catalog::load(catalog_path(o));
  std::vector<PropertyResult> results;
  for (const auto& name : suites.empty() ? property_names() : suites) results.push_back(run_property(name, p, c));
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (o.format == "json") {
      j.push_back(to_json(r));
    } else {
      std::cout << to_text(r) << '\n';
    }
  }
  if (o.format == "json") std::cout << Json{{"seed", p.seed}, {"suites", j}}.dump(2) << '\n';
  return ok ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of braid and mapping class relations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--catalog", o.catalog, "Catalog file (default: $SITWIST_CATALOG, then the shipped catalog)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Verify relations and constraints");
  std::vector<std::string> names;
  bool all = false;
  verify->add_option("names", names, "Relation names or constraint:<name>");
  verify->add_flag("--all", all, "Every relation and constraint");
  verify->add_flag("--serial", o.serial, "Do not run entries concurrently");

  auto* apply = app.add_subcommand("apply", "Image of a curve under a braid");
  std::string braid, curve;
  int strands = 0;
  apply->add_option("braid", braid, "Chronological braid word, e.g. \"1 -2 1\"")->required();
  apply->add_option("curve", curve, "Catalog name, round:i,j@n or coordinate JSON")->required();

  auto* burau = app.add_subcommand("burau", "Burau matrix of a braid");
  bool reduced = false, symbolic = false;
  long at_value = 0;
  burau->add_option("braid", braid)->required();
  burau->add_option("-n,--strands", strands, "Strand count (default: inferred)");
  auto* at_opt = burau->add_option("--at", at_value, "Evaluate at this value of t");
  burau->add_flag("--symbolic", symbolic, "Print Laurent polynomials (default)");
  burau->add_flag("--reduced", reduced, "Reduced representation");
  at_opt->excludes(burau->get_option("--symbolic"));

  auto* forget = app.add_subcommand("forget", "Delete strands of a pure braid");
  std::vector<int> keep;
  forget->add_option("braid", braid)->required();
  forget->add_option("-n,--strands", strands, "Strand count (default: inferred)");
  forget->add_option("--keep", keep, "Strands to keep, increasing")->delimiter(',')->required();

  auto* compile = app.add_subcommand("compile", "Braid word of a catalog curve or arc");
  std::string name;
  bool plain = false;
  compile->add_option("name", name)->required();
  compile->add_flag("--twist", plain, "Single Dehn twist even for symmetric separating curves");

  auto* catalog = app.add_subcommand("catalog", "List catalog entries");
  std::string mirror_to;
  catalog->add_option("--mirror-to", mirror_to, "Write the mirrored catalog to this file");

  auto* props = app.add_subcommand("properties", "Run the randomized property suites");
  std::vector<std::string> suites;
  PropertyOptions popts;
  props->add_option("suites", suites, "Suite names (default: all)");
  props->add_option("--seed", popts.seed, "Random seed")->capture_default_str();
  props->add_option("--cases", popts.cases, "Cases per suite")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify(o, names, all);
    if (*apply) return cmd_apply(o, braid, curve);
    if (*burau) {
      std::optional<long> at;
      if (at_opt->count() > 0) at = at_value;
      return cmd_burau(o, braid, strands, reduced, at);
    }
    if (*forget) return cmd_forget(o, braid, strands, keep);
    if (*compile) return cmd_compile(o, name, plain);
    if (*catalog) return cmd_catalog(o, mirror_to);
    if (*props) return cmd_properties(o, suites, popts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
