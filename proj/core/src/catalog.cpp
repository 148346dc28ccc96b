#include "sitwist/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "sitwist/error.hpp"

namespace sitwist {

namespace {

int power_of(const Json& f) {
  if (!f.contains("power")) return 1;
  const Json& p = f.at("power");
  if (!p.is_number_integer()) throw ParseError("factor power must be an integer");
  return p.get<int>();
}

const Json& factor_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a list of factors");
  return j;
}

std::string str_field(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

// Flips the sign of every stored braid letter inside a factor list.
void mirror_factors(Json& factors);

void mirror_braid_json(Json& b) {
  for (auto& l : b.at("word")) l = -l.get<int>();
}

void mirror_factor(Json& f) {
  if (f.contains("braid")) {
    for (auto& l : f.at("braid")) l = -l.get<int>();
  }
  if (f.contains("by")) mirror_factors(f.at("by"));
  if (f.contains("commutator")) {
    for (auto& side : f.at("commutator")) mirror_factors(side);
  }
}

void mirror_factors(Json& factors) {
  if (!factors.is_array()) return;
  for (auto& f : factors) mirror_factor(f);
}

// Curve names referenced anywhere inside a factor list.
void collect_names(const Json& factors, std::vector<std::string>& out) {
  if (!factors.is_array()) return;
  for (const auto& f : factors) {
    if (!f.is_object()) continue;
    for (const char* key : {"twist", "half", "bh"}) {
      if (f.contains(key) && f.at(key).is_string()) out.push_back(f.at(key).get<std::string>());
    }
    if (f.contains("by")) collect_names(f.at("by"), out);
    if (f.contains("commutator") && f.at("commutator").is_array()) {
      for (const auto& side : f.at("commutator")) collect_names(side, out);
    }
  }
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int CatalogCurve::punctures() const {
  return std::visit([](const auto& s) { return s.punctures; }, spec);
}

bool RelationEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Catalog Catalog::from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("catalog must be a JSON object");
  Catalog c;
  c.raw_ = j;
  const std::string hand = j.contains("handedness") ? str_field(j, "handedness") : "standard";
  if (hand == "standard") {
    c.handedness_ = Handedness::standard;
  } else if (hand == "mirrored") {
    c.handedness_ = Handedness::mirrored;
  } else {
    throw ParseError("unknown handedness '" + hand + "'");
  }

  const Json defs = j.contains("curves") ? j.at("curves") : Json::object();
  if (!defs.is_object()) throw ParseError("'curves' must be an object");
  for (const auto& [name, def] : defs.items()) {
    std::vector<std::string> stack;
    c.resolve(name, defs, stack);
  }

  const Json rels = j.contains("relations") ? j.at("relations") : Json::array();
  if (!rels.is_array()) throw ParseError("'relations' must be a list");
  for (const auto& r : rels) {
    RelationEntry e;
    e.name = str_field(r, "name");
    if (e.name.empty()) throw ParseError("relation without a name");
    const Json& amb = r.contains("ambient") ? r.at("ambient") : Json();
    const std::string type = amb.is_object() ? str_field(amb, "type") : std::string();
    if (type == "braid") {
      e.ambient = Ambient::braid;
      if (!amb.contains("strands") || !amb.at("strands").is_number_integer()) {
        throw ParseError(e.name + ": braid ambient needs 'strands'");
      }
      e.size = amb.at("strands").get<int>();
    } else if (type == "free") {
      e.ambient = Ambient::free;
      if (!amb.contains("rank") || !amb.at("rank").is_number_integer()) {
        throw ParseError(e.name + ": free ambient needs 'rank'");
      }
      e.size = amb.at("rank").get<int>();
    } else {
      throw ParseError(e.name + ": ambient type must be 'braid' or 'free'");
    }
    if (e.size < 1) throw ParseError(e.name + ": ambient size must be positive");
    e.source = str_field(r, "source");
    e.display = str_field(r, "display");
    if (r.contains("tags")) {
      for (const auto& t : r.at("tags")) {
        if (!t.is_string()) throw ParseError(e.name + ": tags must be strings");
        e.tags.push_back(t.get<std::string>());
      }
    }
    if (!r.contains("lhs") || !r.contains("rhs")) throw ParseError(e.name + ": missing lhs or rhs");
    e.lhs = factor_list(r.at("lhs"), e.name + " lhs");
    e.rhs = factor_list(r.at("rhs"), e.name + " rhs");
    if (std::any_of(c.relations_.begin(), c.relations_.end(),
                    [&](const RelationEntry& o) { return o.name == e.name; })) {
      throw ParseError("duplicate relation '" + e.name + "'");
    }
    // Compiling once checks every curve reference and every bound.
    try {
      if (e.ambient == Ambient::braid) {
        c.compile(e.lhs, e.size);
        c.compile(e.rhs, e.size);
      } else {
        c.compile_free(e.lhs, e.size);
        c.compile_free(e.rhs, e.size);
      }
    } catch (const DomainError& err) {
      throw ParseError(e.name + ": " + err.what());
    }
    c.relations_.push_back(std::move(e));
  }
  return c;
}

void Catalog::apply_op(std::variant<CurveSpec, ArcSpec>& spec, const Json& op, const std::string& name) const {
  using Spec = std::variant<CurveSpec, ArcSpec>;
  if (op.contains("by")) {
    const int n = std::visit([](const auto& s) { return s.punctures; }, spec);
    const BraidWord g = compile(op.at("by"), n);
    spec = std::visit([&](const auto& s) -> Spec { return transport(s, g); }, spec);
  } else if (op.contains("cable")) {
    const int strand = op.at("cable").get<int>();
    spec = std::visit(
        [&](const auto& x) -> Spec {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CurveSpec>) {
            return cable_curve(x, strand);
          } else {
            return cable_arc(x, strand);
          }
        },
        spec);
  } else if (op.contains("embed")) {
    const int n = op.at("embed").get<int>();
    spec = std::visit(
        [&](const auto& x) -> Spec {
          if (n < x.punctures) throw DomainError("cannot embed into fewer strands");
          BraidWord prep(n, std::vector<Letter>(x.prep.letters().begin(), x.prep.letters().end()));
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CurveSpec>) {
            return CurveSpec(n, x.first, x.last, std::move(prep));
          } else {
            return ArcSpec(n, x.left, std::move(prep));
          }
        },
        spec);
  } else {
    throw ParseError("curve '" + name + "': unknown operation " + op.dump());
  }
}

void Catalog::resolve(const std::string& name, const Json& defs, std::vector<std::string>& stack) {
  if (curves_.count(name)) return;
  if (std::find(stack.begin(), stack.end(), name) != stack.end()) {
    throw ParseError("curve '" + name + "' is defined in terms of itself");
  }
  if (!defs.contains(name)) throw ParseError("unknown curve '" + name + "'");
  const Json& def = defs.at(name);
  if (!def.is_object()) throw ParseError("curve '" + name + "' must be an object");
  stack.push_back(name);

  CatalogCurve out;
  out.name = name;
  if (def.contains("symmetric-separating")) {
    out.symmetric_separating = def.at("symmetric-separating").get<bool>();
  }
  try {
    if (def.contains("from")) {
      const std::string base = str_field(def, "from");
      resolve(base, defs, stack);
      out.spec = curves_.at(base).spec;
    } else {
      const std::string kind = def.contains("kind") ? str_field(def, "kind") : "curve";
      if (kind == "curve") {
        out.spec = curve_from_json(def);
      } else if (kind == "arc") {
        out.spec = arc_from_json(def);
      } else {
        throw ParseError("curve '" + name + "': unknown kind '" + kind + "'");
      }
    }
    const Json ops = def.contains("ops") ? def.at("ops") : Json::array();
    if (!ops.is_array()) throw ParseError("curve '" + name + "': 'ops' must be a list");
    for (const auto& op : ops) {
      if (op.contains("by")) {
        std::vector<std::string> deps;
        collect_names(op.at("by"), deps);
        for (const auto& d : deps) resolve(d, defs, stack);
      }
      apply_op(out.spec, op, name);
    }
  } catch (const DomainError& e) {
    throw ParseError("curve '" + name + "': " + e.what());
  } catch (const Json::exception& e) {
    throw ParseError("curve '" + name + "': " + e.what());
  }
  stack.pop_back();
  curves_.emplace(name, std::move(out));
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog '" + path.string() + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("catalog '" + path.string() + "': " + e.what());
  }
  return from_json(j);
}

void Catalog::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << raw_.dump(2) << '\n';
}

const CatalogCurve& Catalog::entry(const std::string& name) const {
  auto it = curves_.find(name);
  if (it == curves_.end()) throw DomainError("unknown curve '" + name + "'");
  return it->second;
}

const CurveSpec& Catalog::curve(const std::string& name) const {
  const CatalogCurve& e = entry(name);
  if (e.is_arc()) throw DomainError("'" + name + "' is an arc, not a curve");
  return std::get<CurveSpec>(e.spec);
}

const ArcSpec& Catalog::arc(const std::string& name) const {
  const CatalogCurve& e = entry(name);
  if (!e.is_arc()) throw DomainError("'" + name + "' is a curve, not an arc");
  return std::get<ArcSpec>(e.spec);
}

const RelationEntry& Catalog::relation(const std::string& name) const {
  for (const auto& r : relations_) {
    if (r.name == name) return r;
  }
  throw DomainError("unknown relation '" + name + "'");
}

BraidWord Catalog::twist(const CurveSpec& c) const {
  BraidWord full = full_twist_word(c.punctures, c.first, c.last);
  if (handedness_ == Handedness::mirrored) full = sitwist::mirror(full);
  return conjugate(full, c.prep);
}

BraidWord Catalog::half(const ArcSpec& a) const {
  const int sign = handedness_ == Handedness::standard ? 1 : -1;
  return conjugate(BraidWord::generator(a.punctures, a.left, sign), a.prep);
}

BraidWord Catalog::bh(const CurveSpec& c) const {
  bh_twist_image(c);  // validates the puncture count
  return power(twist(c), 2);
}

BraidWord Catalog::push(const FreeWord& w) const {
  BraidWord b = push_loop(w);
  return handedness_ == Handedness::standard ? b : sitwist::mirror(b);
}

BraidWord Catalog::compile(const Json& factors, int strands) const {
  if (!factors.is_array()) throw ParseError("expected a list of factors");
  BraidWord out(strands);
  for (const auto& f : factors) out = then(out, compile_factor(f, strands));
  return out;
}

BraidWord Catalog::compile_factor(const Json& f, int strands) const {
  if (!f.is_object()) throw ParseError("factor must be an object");
  const int k = power_of(f);
  auto check_strands = [&](int n, const std::string& what) {
    if (n != strands) {
      throw DomainError(what + " lives on " + std::to_string(n) + " strands, expected " +
                        std::to_string(strands));
    }
  };
  auto moved = [&](auto spec) {
    if (f.contains("by")) spec = transport(spec, compile(f.at("by"), strands));
    return spec;
  };
  if (f.contains("twist")) {
    const CurveSpec c = moved(curve(f.at("twist").get<std::string>()));
    check_strands(c.punctures, "curve " + f.at("twist").get<std::string>());
    return power(twist(c), k);
  }
  if (f.contains("half")) {
    const ArcSpec a = moved(arc(f.at("half").get<std::string>()));
    check_strands(a.punctures, "arc " + f.at("half").get<std::string>());
    return power(half(a), k);
  }
  if (f.contains("bh")) {
    const CurveSpec c = moved(curve(f.at("bh").get<std::string>()));
    check_strands(c.punctures, "curve " + f.at("bh").get<std::string>());
    return power(bh(c), k);
  }
  if (f.contains("push")) {
    const FreeWord w = parse_free_word(f.at("push").get<std::string>(), strands - 1);
    return power(push(w), k);
  }
  if (f.contains("braid")) {
    std::vector<Letter> letters;
    for (const auto& l : f.at("braid")) letters.push_back(l.get<int>());
    return power(BraidWord(strands, std::move(letters)), k);
  }
  if (f.contains("commutator")) {
    const Json& sides = f.at("commutator");
    if (!sides.is_array() || sides.size() != 2) throw ParseError("commutator needs two factor lists");
    return power(commutator(compile(sides.at(0), strands), compile(sides.at(1), strands)), k);
  }
  throw ParseError("unknown braid factor " + f.dump());
}

FreeWord Catalog::compile_free(const Json& factors, int rank) const {
  if (!factors.is_array()) throw ParseError("expected a list of factors");
  FreeWord out(rank);
  for (const auto& f : factors) out = fg_multiply(out, compile_free_factor(f, rank));
  return out;
}

FreeWord Catalog::compile_free_factor(const Json& f, int rank) const {
  if (!f.is_object()) throw ParseError("factor must be an object");
  const int k = power_of(f);
  if (f.contains("word")) return fg_power(parse_free_word(f.at("word").get<std::string>(), rank), k);
  auto pair = [&](const char* key) {
    const Json& sides = f.at(key);
    if (!sides.is_array() || sides.size() != 2) throw ParseError(std::string(key) + " needs two factor lists");
    return std::pair{compile_free(sides.at(0), rank), compile_free(sides.at(1), rank)};
  };
  if (f.contains("commutator")) {
    auto [u, v] = pair("commutator");
    return fg_power(fg_commutator(u, v), k);
  }
  if (f.contains("conj")) {
    auto [g, w] = pair("conj");
    return fg_power(fg_conjugate(w, g), k);
  }
  throw ParseError("unknown free factor " + f.dump());
}

Catalog mirror(const Catalog& c) {
  Json j = c.to_json();
  j["handedness"] = c.handedness() == Handedness::standard ? "mirrored" : "standard";
  if (j.contains("curves")) {
    for (auto& [name, def] : j.at("curves").items()) {
      if (def.contains("prep")) mirror_braid_json(def.at("prep"));
      if (def.contains("ops")) {
        for (auto& op : def.at("ops")) {
          if (op.contains("by")) mirror_factors(op.at("by"));
        }
      }
    }
  }
  if (j.contains("relations")) {
    for (auto& r : j.at("relations")) {
      const bool braid = r.contains("ambient") && r.at("ambient").value("type", "") == "braid";
      if (!braid) continue;
      mirror_factors(r.at("lhs"));
      mirror_factors(r.at("rhs"));
    }
  }
  return Catalog::from_json(j);
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back(Check{std::move(name), ok, std::move(detail)});
}

int Summary::passed() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); }));
}

int Summary::failed() const { return static_cast<int>(reports.size()) - passed(); }

Report verify_relation(const Catalog& c, const RelationEntry& e) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.subject = e.name;
  try {
    if (e.ambient == Ambient::free) {
      const FreeWord lhs = c.compile_free(e.lhs, e.size);
      const FreeWord rhs = c.compile_free(e.rhs, e.size);
      r.add("free-equal", fg_equal(lhs, rhs), fg_equal(lhs, rhs) ? "" : to_string(fg_reduce(lhs)) + " vs " + to_string(fg_reduce(rhs)));
    } else {
      const BraidWord lhs = c.lhs(e);
      const BraidWord rhs = c.rhs(e);
      r.add("equals", equals(lhs, rhs));
      const long el = exponent_sum(lhs);
      const long er = exponent_sum(rhs);
      r.add("exponent-sum", el == er, std::to_string(el) + " vs " + std::to_string(er));
      r.add("permutation", underlying_permutation(lhs) == underlying_permutation(rhs));
      if (is_pure(lhs) && is_pure(rhs)) r.add("linking", linking_matrix(lhs) == linking_matrix(rhs));
      r.add("burau", burau_unreduced(lhs) == burau_unreduced(rhs));
      if (e.has_tag("SI")) {
        r.add("torelli-lhs", is_torelli_shadow(lhs));
        r.add("torelli-rhs", is_torelli_shadow(rhs));
      }
      for (int i = 1; i < e.size && e.size >= 3; ++i) {
        r.growth = std::max(r.growth, norm(apply_braid(round_curve(e.size, i, i + 1), lhs)));
      }
    }
  } catch (const Error& err) {
    r.add("compile", false, err.what());
  }
  r.seconds = elapsed_since(start);
  return r;
}

Summary verify_all(const Catalog& c, bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  Summary s;
  if (c.relations().empty() && c.curves().empty()) {
    s.warnings.push_back("catalog is empty; nothing was verified");
    s.seconds = elapsed_since(start);
    return s;
  }
  if (parallel) {
    std::vector<std::future<Report>> jobs;
    for (const auto& e : c.relations()) {
      jobs.push_back(std::async(std::launch::async, [&c, &e] { return verify_relation(c, e); }));
    }
    auto constraints = std::async(std::launch::async, [&c] { return verify_constraints(c); });
    for (auto& j : jobs) s.reports.push_back(j.get());
    for (auto& r : constraints.get()) s.reports.push_back(std::move(r));
  } else {
    for (const auto& e : c.relations()) s.reports.push_back(verify_relation(c, e));
    for (auto& r : verify_constraints(c)) s.reports.push_back(std::move(r));
  }
  std::sort(s.reports.begin(), s.reports.end(),
            [](const Report& a, const Report& b) { return a.subject < b.subject; });
  s.seconds = elapsed_since(start);
  return s;
}

Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"subject", r.subject}, {"passed", r.passed()}, {"seconds", r.seconds},
              {"growth", r.growth.str()}, {"checks", checks}};
}

Json to_json(const Summary& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return Json{{"passed", s.passed()}, {"failed", s.failed()}, {"seconds", s.seconds},
              {"warnings", s.warnings}, {"reports", reports}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.subject;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << "  (" << r.seconds << " s)\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

std::string to_text(const Summary& s) {
  std::ostringstream out;
  for (const auto& w : s.warnings) out << "warning: " << w << '\n';
  for (const auto& r : s.reports) out << to_text(r);
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s.passed() << " passed, " << s.failed() << " failed in " << s.seconds << " s\n";
  return out.str();
}

}  // namespace sitwist
