#include "sitwist/properties.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "sitwist/error.hpp"
#include "sitwist/homology.hpp"

namespace sitwist {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_word(Rng& rng, int n, int max_len) {
  std::vector<Letter> letters;
  const int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) {
    const int i = uniform(rng, 1, n - 1);
    letters.push_back(uniform(rng, 0, 1) ? i : -i);
  }
  return BraidWord(n, std::move(letters));
}

// A product of conjugates of squared generators, hence pure.
BraidWord random_pure(Rng& rng, int n, int factors) {
  BraidWord out(n);
  const int count = uniform(rng, 0, factors);
  for (int k = 0; k < count; ++k) {
    const BraidWord sq = power(BraidWord::generator(n, uniform(rng, 1, n - 1), uniform(rng, 0, 1) ? 1 : -1), 2);
    out = then(out, conjugate(sq, random_word(rng, n, 4)));
  }
  return out;
}

// Every nonzero integer vector is a multicurve, so these are all valid.
LoopCoordinates random_curve(Rng& rng, int n, int range = 20) {
  for (;;) {
    std::vector<BigInt> a;
    std::vector<BigInt> b;
    bool nonzero = false;
    for (int k = 0; k < n - 2; ++k) {
      a.emplace_back(uniform(rng, -range, range));
      b.emplace_back(uniform(rng, -range, range));
      nonzero = nonzero || a.back() != 0 || b.back() != 0;
    }
    if (nonzero) return LoopCoordinates(n, std::move(a), std::move(b));
  }
}

FreeWord random_reduced(Rng& rng, int rank, int max_len) {
  std::vector<int> letters;
  const int len = uniform(rng, 0, max_len);
  while (static_cast<int>(letters.size()) < len) {
    const int i = uniform(rng, 1, rank);
    const int l = uniform(rng, 0, 1) ? i : -i;
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return FreeWord(rank, std::move(letters));
}

std::string show(const LoopCoordinates& c) {
  std::ostringstream out;
  out << "a=(";
  for (const auto& x : c.a()) out << x << ' ';
  out << ") b=(";
  for (const auto& x : c.b()) out << x << ' ';
  out << ')';
  return out.str();
}

std::string show(const BraidWord& w) { return "[" + to_string(w) + "] in B" + std::to_string(w.strands()); }

// A case returns an empty string on success and a description otherwise.
using Case = std::function<std::string(Rng&)>;

std::string lamination_braid_relations(Rng& rng) {
  const int n = uniform(rng, 3, 7);
  const LoopCoordinates c = random_curve(rng, n);
  const int i = uniform(rng, 1, n - 1);
  if (i + 1 <= n - 1) {
    const BraidWord l(n, {i, i + 1, i});
    const BraidWord r(n, {i + 1, i, i + 1});
    if (!(apply_braid(c, l) == apply_braid(c, r))) return "braid relation at " + std::to_string(i) + " on " + show(c);
  }
  const int j = uniform(rng, 1, n - 1);
  if (std::abs(i - j) >= 2) {
    if (!(apply_braid(c, BraidWord(n, {i, j})) == apply_braid(c, BraidWord(n, {j, i})))) {
      return "far commutation " + std::to_string(i) + "," + std::to_string(j) + " on " + show(c);
    }
  }
  if (!(apply_generator(c, i, 1) == apply_braid(c, BraidWord(n, {i})))) return "generator vs word on " + show(c);
  const LoopCoordinates boundary = LoopCoordinates::boundary_parallel(n);
  if (!(apply_generator(boundary, i, uniform(rng, 0, 1) ? 1 : -1) == boundary)) return "boundary moved";
  return {};
}

std::string action_compose(Rng& rng) {
  const int n = uniform(rng, 3, 7);
  const LoopCoordinates c = random_curve(rng, n);
  const BraidWord a = random_word(rng, n, 12);
  const BraidWord b = random_word(rng, n, 12);
  if (!(apply_braid(c, compose(a, b)) == apply_braid(apply_braid(c, b), a))) {
    return "compose " + show(a) + " " + show(b) + " on " + show(c);
  }
  if (!(apply_braid(c, then(a, b)) == apply_braid(apply_braid(c, a), b))) return "then " + show(a) + " " + show(b);
  return {};
}

std::string inverse_round_trip(Rng& rng) {
  const int n = uniform(rng, 3, 7);
  const LoopCoordinates c = random_curve(rng, n);
  const BraidWord w = random_word(rng, n, 16);
  if (!(apply_braid(apply_braid(c, w), inverse(w)) == c)) return "curve round trip " + show(w) + " on " + show(c);
  const int i = uniform(rng, 1, n - 1);
  if (!(apply_generator(apply_generator(c, i, 1), i, -1) == c)) return "generator round trip on " + show(c);
  if (!is_trivial(compose(w, inverse(w)))) return "w w^-1 not trivial for " + show(w);
  if (!(inverse(inverse(w)) == w)) return "double inverse " + show(w);
  const FreeWord x = random_reduced(rng, n, 8);
  if (!fg_equal(apply_artin(apply_artin(x, w), inverse(w)), x)) return "artin round trip " + show(w);
  return {};
}

std::string exponent_sum_law(Rng& rng) {
  const int n = uniform(rng, 2, 7);
  const BraidWord a = random_word(rng, n, 16);
  const BraidWord b = random_word(rng, n, 16);
  if (exponent_sum(compose(a, b)) != exponent_sum(a) + exponent_sum(b)) return show(a) + " " + show(b);
  if (exponent_sum(inverse(a)) != -exponent_sum(a)) return "inverse " + show(a);
  return {};
}

std::string permutation_law(Rng& rng) {
  const int n = uniform(rng, 2, 7);
  const BraidWord a = random_word(rng, n, 16);
  const BraidWord b = random_word(rng, n, 16);
  const Permutation pa = underlying_permutation(a);
  const Permutation pb = underlying_permutation(b);
  // A strand starting at k ends at perm(k), so b then a gives pa after pb.
  if (!(underlying_permutation(compose(a, b)) == pa * pb)) return show(a) + " " + show(b);
  if (!(underlying_permutation(inverse(a)) == pa.inverse())) return "inverse " + show(a);
  if (is_pure(a) != pa.is_identity()) return "is_pure " + show(a);
  return {};
}

std::string linking_law(Rng& rng) {
  const int n = uniform(rng, 2, 7);
  const BraidWord a = random_pure(rng, n, 4);
  const BraidWord b = random_pure(rng, n, 4);
  const LinkingMatrix la = linking_matrix(a);
  const LinkingMatrix lb = linking_matrix(b);
  const LinkingMatrix lab = linking_matrix(compose(a, b));
  long total = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (lab.at(i, j) != la.at(i, j) + lb.at(i, j)) return show(a) + " " + show(b);
      if (lab.at(i, j) != lab.at(j, i)) return "asymmetric";
      if (i < j) total += la.at(i, j);
    }
  }
  // Each crossing contributes to exactly one pair.
  if (2 * total != exponent_sum(a)) return "total linking vs exponent sum " + show(a);
  return {};
}

std::string forget_law(Rng& rng) {
  const int n = uniform(rng, 3, 7);
  const BraidWord a = random_pure(rng, n, 4);
  const BraidWord b = random_pure(rng, n, 4);
  std::vector<int> keep;
  for (int k = 1; k <= n; ++k) {
    if (uniform(rng, 0, 1)) keep.push_back(k);
  }
  if (keep.empty()) keep.push_back(uniform(rng, 1, n));
  const BraidWord fab = forget_strands(compose(a, b), keep);
  const BraidWord fa = forget_strands(a, keep);
  const BraidWord fb = forget_strands(b, keep);
  if (!is_pure(fab) || !is_pure(fa)) return "image not pure";
  if (!equals(fab, compose(fa, fb))) return "forget " + show(a) + " " + show(b);
  if (!artin_equal(fab, compose(fa, fb))) return "forget (artin) " + show(a) + " " + show(b);
  // Linking numbers of surviving pairs are unchanged.
  const LinkingMatrix la = linking_matrix(a);
  const LinkingMatrix lf = linking_matrix(fa);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (lf.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) != la.at(keep[i], keep[j])) return "linking after forget";
    }
  }
  return {};
}

std::string burau_law(Rng& rng) {
  const int n = uniform(rng, 2, 5);
  const BraidWord a = random_word(rng, n, 10);
  const BraidWord b = random_word(rng, n, 10);
  if (!(burau_unreduced(compose(a, b)) == burau_unreduced(a) * burau_unreduced(b))) return "unreduced " + show(a) + " " + show(b);
  if (!(burau_reduced(compose(a, b)) == burau_reduced(a) * burau_reduced(b))) return "reduced " + show(a) + " " + show(b);
  if (!(burau_unreduced(compose(a, inverse(a))) == LaurentMatrix::identity(n))) return "inverse " + show(a);
  return {};
}

std::string burau_determinant(Rng& rng) {
  const int n = uniform(rng, 2, 5);
  const BraidWord a = random_word(rng, n, 12);
  const long e = exponent_sum(a);
  const LaurentPoly want = LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, static_cast<int>(e));
  if (!(determinant(burau_unreduced(a)) == want)) return "unreduced " + show(a);
  if (n >= 2 && !(determinant(burau_reduced(a)) == want)) return "reduced " + show(a);
  return {};
}

std::string witt_hall(Rng& rng) {
  const int rank = uniform(rng, 1, 5);
  const FreeWord x = random_reduced(rng, rank, 32);
  const FreeWord y = random_reduced(rng, rank, 32);
  const FreeWord z = random_reduced(rng, rank, 32);
  if (!fg_equal(witt_hall_expand_left(x, y, z), fg_commutator(x * y, z))) return "left " + to_string(x) + " | " + to_string(y) + " | " + to_string(z);
  if (!fg_equal(witt_hall_expand_right(x, y, z), fg_commutator(x, y * z))) return "right " + to_string(x) + " | " + to_string(y) + " | " + to_string(z);
  if (!fg_equal(square_commutator_expansion(x, y), fg_commutator(fg_power(x, 2), fg_power(y, 2)))) return "square";
  return {};
}

// Inserts relators at random positions, or flips a letter, and compares the
// lamination decision with the Artin action.
std::string equals_vs_artin(Rng& rng) {
  const int n = uniform(rng, 3, 6);
  const BraidWord a = random_word(rng, n, 12);
  std::vector<Letter> b(a.letters().begin(), a.letters().end());
  if (uniform(rng, 0, 3) == 0 && !b.empty()) {
    b[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(b.size()) - 1))] *= -1;
  } else {
    for (int k = uniform(rng, 1, 3); k > 0; --k) {
      const int i = uniform(rng, 1, n - 1);
      std::vector<Letter> rel;
      if (i + 1 <= n - 1 && uniform(rng, 0, 1)) {
        rel = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
      } else {
        const int j = uniform(rng, 1, n - 1);
        rel = {i, j, -i, -j};
        if (std::abs(i - j) == 1) rel = {i, -i};
      }
      const auto pos = b.begin() + uniform(rng, 0, static_cast<int>(b.size()));
      b.insert(pos, rel.begin(), rel.end());
    }
  }
  const BraidWord bw(n, std::move(b));
  if (equals(a, bw) != artin_equal(a, bw)) return show(a) + " vs " + show(bw);
  return {};
}

// Letters that fix round(first, last), or the arc from left to left+1.
BraidWord random_stabilizer(Rng& rng, int n, int first, int last) {
  std::vector<Letter> pool;
  for (int k = 1; k <= n - 1; ++k) {
    if ((k >= first && k < last) || k + 1 < first || k > last) pool.push_back(k);
  }
  std::vector<Letter> letters;
  if (pool.empty()) return BraidWord(n);
  for (int len = uniform(rng, 1, 8); len > 0; --len) {
    const Letter l = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    letters.push_back(uniform(rng, 0, 1) ? l : -l);
  }
  return BraidWord(n, std::move(letters));
}

// g T_x g^-1 against the twist about g(x), where g(x) is written with a
// different prep word (a stabilizer of the base curve inserted first) so
// the two sides do not cancel letter by letter.
Case naturality(const Catalog& catalog) {
  std::vector<const CatalogCurve*> entries;
  for (const auto& [name, e] : catalog.curves()) entries.push_back(&e);
  if (entries.empty()) throw DomainError("the naturality suite needs a catalog with curves");
  return [entries](Rng& rng) -> std::string {
    const CatalogCurve& e = *entries[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(entries.size()) - 1))];
    const int n = e.punctures();
    const BraidWord g = random_word(rng, n, 16);
    if (const auto* c = std::get_if<CurveSpec>(&e.spec)) {
      const BraidWord s = random_stabilizer(rng, n, c->first, c->last);
      const CurveSpec image(n, c->first, c->last, then(then(s, c->prep), g));
      if (!curves_equal(realize(image), realize(transport(*c, g)))) return e.name + " stabilizer moved the curve";
      if (!equals(conjugate(dehn_twist(*c), g), dehn_twist(image))) return e.name + " by " + show(g);
    } else {
      const ArcSpec& arc = std::get<ArcSpec>(e.spec);
      const BraidWord s = random_stabilizer(rng, n, arc.left, arc.left + 1);
      const ArcSpec image(n, arc.left, then(then(s, arc.prep), g));
      if (!equals(conjugate(half_twist(arc), g), half_twist(image))) return e.name + " by " + show(g);
      if (!equals(power(half_twist(image), 2), dehn_twist(arc_boundary(image)))) return e.name + " square law";
    }
    return {};
  };
}

const std::map<std::string, Case>& fixed_suites() {
  static const std::map<std::string, Case> suites = {
      {"lamination-braid-relations", lamination_braid_relations},
      {"action-compose", action_compose},
      {"inverse-round-trip", inverse_round_trip},
      {"homomorphism-exponent-sum", exponent_sum_law},
      {"homomorphism-permutation", permutation_law},
      {"homomorphism-linking", linking_law},
      {"homomorphism-forget", forget_law},
      {"homomorphism-burau", burau_law},
      {"burau-determinant", burau_determinant},
      {"witt-hall", witt_hall},
      {"equals-vs-artin", equals_vs_artin},
  };
  return suites;
}

// std::hash differs between standard libraries; seeds should not.
std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : s) h = (h ^ ch) * 16777619u;
  return h;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : fixed_suites()) names.push_back(name);
  names.push_back("naturality");
  return names;
}

PropertyResult run_property(const std::string& name, const PropertyOptions& options, const Catalog& catalog) {
  Case body;
  if (name == "naturality") {
    body = naturality(catalog);
  } else {
    const auto it = fixed_suites().find(name);
    if (it == fixed_suites().end()) throw DomainError("unknown property suite '" + name + "'");
    body = it->second;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    fnv1a(name)};
  Rng rng(seq);
  PropertyResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < options.cases; ++k) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const Error& e) {
      failure = std::string("threw: ") + e.what();
    }
    ++r.cases;
    if (!failure.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + failure;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<PropertyResult> run_properties(const PropertyOptions& options, const Catalog& catalog) {
  std::vector<PropertyResult> out;
  for (const auto& name : property_names()) out.push_back(run_property(name, options, catalog));
  return out;
}

Json to_json(const PropertyResult& r) {
  Json j = {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}, {"seconds", r.seconds}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

std::string to_text(const PropertyResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures ("
      << r.seconds << " s)";
  if (!r.first_failure.empty()) out << "\n  " << r.first_failure;
  return out.str();
}

}  // namespace sitwist
