// One PASS/FAIL line per acceptance criterion, each under its time limit.
// Exit status is 0 only if every line passes.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sitwist/catalog.hpp"
#include "sitwist/constraints.hpp"
#include "sitwist/error.hpp"
#include "sitwist/homology.hpp"
#include "sitwist/properties.hpp"

using namespace sitwist;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    note += (note.empty() ? "" : "; ") + what;
  }
  void require(const Report& r) {
    for (const auto& c : r.checks) require(c.passed, r.subject + " / " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

bool has_checks(const Report& r, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    bool found = false;
    for (const auto& c : r.checks) found = found || c.name == n;
    if (!found) return false;
  }
  return true;
}

void braid_relation(Outcome& o, const Catalog& c, const char* name) {
  const Report r = verify_relation(c, c.relation(name));
  o.require(has_checks(r, {"equals", "exponent-sum", "permutation", "linking", "burau"}), std::string(name) + " is missing invariant checks");
  o.require(r);
}

Outcome free_group(const Catalog& c) {
  Outcome o;
  for (const char* name : {"REL-WH-L", "REL-WH-R", "REL-WH-SQ", "REL-PI1-FIRST", "REL-PI1-SECOND"}) {
    o.require(verify_relation(c, c.relation(name)));
  }
  const FreeWord x = parse_free_word("x1 x2", 3), y = parse_free_word("x3^-1", 3), z = parse_free_word("x2 x1^-1", 3);
  o.require(fg_equal(witt_hall_expand_left(x, y, z), fg_commutator(x * y, z)), "left expansion");
  o.require(fg_equal(witt_hall_expand_right(x, y, z), fg_commutator(x, y * z)), "right expansion");
  o.require(fg_equal(square_commutator_expansion(x, y), fg_commutator(fg_power(x, 2), fg_power(y, 2))), "square expansion");
  return o;
}

Outcome bounding_pair(const Catalog& c) {
  Outcome o;
  braid_relation(o, c, "REL-SSIP-B7");
  return o;
}

Outcome chain(const Catalog& c) {
  Outcome o;
  braid_relation(o, c, "REL-SZSIP-B7");
  const Report d = check_disjointness_chain(c);
  o.require(d.checks.size() == 5, "disjointness chain should have 5 checks");
  o.require(d);
  return o;
}

Outcome genus_two(const Catalog& c) {
  Outcome o;
  braid_relation(o, c, "REL-AUX1B-PB5");
  const auto rows = boundary_sweep(c, -3, 3);
  o.require(rows.size() == 7, "sweep should cover k = -3..3");
  std::ostringstream images;
  for (const auto& row : rows) {
    o.require(row.holds == (row.k == -1), "k=" + std::to_string(row.k) + (row.holds ? " holds" : " fails"));
    o.require(row.image == 2 + 2 * row.k, "k=" + std::to_string(row.k) + " image " + std::to_string(row.image));
    images << (images.tellp() > 0 ? "," : "") << row.image;
  }
  if (o.ok) o.note = "images " + images.str();
  return o;
}

Outcome curve_equalities(const Catalog& c) {
  Outcome o;
  const Report r = check_curve_equalities(c);
  o.require(r.checks.size() == 3, "expected three curve equalities");
  o.require(r);
  return o;
}

Outcome push(const Catalog& c) {
  Outcome o;
  o.require(check_square_correspondences(c));
  o.require(check_push_correspondences(c));
  return o;
}

Outcome torelli(const Catalog& c) {
  Outcome o;
  int count = 0;
  for (const auto& e : c.relations()) {
    if (!e.has_tag("SI") || e.ambient != Ambient::braid) continue;
    ++count;
    o.require(is_torelli_shadow(c.lhs(e)), e.name + " lhs");
  }
  const RelationEntry& pb5 = c.relation("REL-AUX1B-PB5");
  o.require(is_torelli_shadow(c.rhs(pb5)), "REL-AUX1B-PB5 rhs");
  for (const char* required : {"REL-SSIP-B7", "REL-SZSIP-B7", "REL-AUX1B-PB5"}) {
    o.require(c.relation(required).has_tag("SI"), std::string(required) + " is not tagged SI");
  }
  if (o.ok) o.note = std::to_string(count) + " tagged entries";
  return o;
}

Outcome properties(const Catalog& c, const PropertyOptions& p) {
  Outcome o;
  int suites = 0;
  for (const auto& r : run_properties(p, c)) {
    ++suites;
    o.require(r.cases >= 1000, r.name + " ran only " + std::to_string(r.cases) + " cases");
    o.require(r.failures == 0, r.name + ": " + r.first_failure);
  }
  if (o.ok) o.note = std::to_string(suites) + " suites, seed " + std::to_string(p.seed);
  return o;
}

Outcome mirrored(const Catalog& c, const std::string& mirrored_path) {
  Outcome o;
  const Summary in_memory = verify_all(mirror(c));
  o.require(in_memory.failed() == 0, std::to_string(in_memory.failed()) + " failures in the mirrored catalog");
  const Summary from_file = verify_all(Catalog::load(mirrored_path));
  o.require(from_file.failed() == 0, std::to_string(from_file.failed()) + " failures in " + mirrored_path);
  if (o.ok) o.note = std::to_string(from_file.passed()) + " reports";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string catalog_path = SITWIST_TEST_CATALOG;
  std::string mirrored_path = SITWIST_TEST_MIRRORED_CATALOG;
  PropertyOptions popts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (i + 1 >= argc) {
      std::cerr << "usage: acceptance [--catalog FILE] [--mirrored FILE] [--seed N]\n";
      return 2;
    }
    if (arg == "--catalog") {
      catalog_path = argv[++i];
    } else if (arg == "--mirrored") {
      mirrored_path = argv[++i];
    } else if (arg == "--seed") {
      popts.seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "unknown option " << arg << '\n';
      return 2;
    }
  }

  std::optional<Catalog> catalog;
  try {
    catalog = Catalog::load(catalog_path);
  } catch (const Error& e) {
    std::cerr << "cannot load " << catalog_path << ": " << e.what() << '\n';
    return 2;
  }
  const Catalog& c = *catalog;

  struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds; 0 means none
    std::function<Outcome()> body;
  };
  const Criterion criteria[] = {
      {1, "free-group identities", 0.1, [&] { return free_group(c); }},
      {2, "REL-SSIP-B7 with all invariants", 2, [&] { return bounding_pair(c); }},
      {3, "REL-SZSIP-B7 and disjointness chain", 5, [&] { return chain(c); }},
      {4, "REL-AUX1B-PB5 and boundary sweep", 5, [&] { return genus_two(c); }},
      {5, "curve equalities", 1, [&] { return curve_equalities(c); }},
      {6, "push correspondences in B6", 5, [&] { return push(c); }},
      {7, "Torelli shadows of SI entries", 2, [&] { return torelli(c); }},
      {8, "property suites", 60, [&] { return properties(c, popts); }},
      {9, "mirrored catalog", 0, [&] { return mirrored(c, mirrored_path); }},
  };

  int failures = 0;
  for (const auto& k : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = k.body();
    } catch (const Error& e) {
      o.ok = false;
      o.note = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k.limit > 0 && secs >= k.limit) {
      o.ok = false;
      std::ostringstream msg;
      msg << "over the " << k.limit << " s limit";
      o.note += (o.note.empty() ? "" : "; ") + msg.str();
    }
    if (!o.ok) ++failures;
    std::cout << "criterion " << k.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << k.title << "  [" << std::fixed
              << std::setprecision(3) << secs << " s";
    if (k.limit > 0) std::cout << " / " << std::defaultfloat << k.limit << " s";
    std::cout << "]";
    if (!o.note.empty()) std::cout << "  " << o.note;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
