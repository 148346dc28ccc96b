#include "sitwist/json_io.hpp"

#include <string>

#include "sitwist/error.hpp"

namespace sitwist {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(x));
  }
  return Json(x.str());
}

BigInt big_from_json(const Json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("malformed integer '" + v.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer");
}

std::vector<BigInt> big_list(const Json& v) {
  if (!v.is_array()) throw ParseError("coordinate list must be an array");
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(big_from_json(x));
  return out;
}

}  // namespace

Json to_json(const BraidWord& w) {
  return Json{{"strands", w.strands()}, {"word", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

BraidWord braid_from_json(const Json& j) {
  try {
    return BraidWord(int_field(j, "strands"), int_list(field(j, "word"), "word"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const FreeWord& w) {
  return Json{{"rank", w.rank()}, {"word", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

FreeWord free_word_from_json(const Json& j) {
  try {
    return FreeWord(int_field(j, "rank"), int_list(field(j, "word"), "word"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const LoopCoordinates& c) {
  Json a = Json::array();
  Json b = Json::array();
  for (const auto& x : c.a()) a.push_back(big_to_json(x));
  for (const auto& x : c.b()) b.push_back(big_to_json(x));
  Json out{{"punctures", c.punctures()}, {"a", a}, {"b", b}};
  if (c.is_boundary_parallel()) out["boundary"] = true;
  return out;
}

LoopCoordinates loop_from_json(const Json& j) {
  const int n = int_field(j, "punctures");
  try {
    if (j.contains("boundary") && j.at("boundary").is_boolean() && j.at("boundary").get<bool>()) {
      return LoopCoordinates::boundary_parallel(n);
    }
    return LoopCoordinates(n, big_list(field(j, "a")), big_list(field(j, "b")));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const CurveSpec& c) {
  return Json{{"punctures", c.punctures}, {"base", {c.first, c.last}}, {"prep", to_json(c.prep)}};
}

CurveSpec curve_from_json(const Json& j) {
  const int n = int_field(j, "punctures");
  const std::vector<int> base = int_list(field(j, "base"), "base");
  if (base.size() != 2) throw ParseError("curve base must be [i, j]");
  BraidWord prep = j.contains("prep") ? braid_from_json(j.at("prep")) : BraidWord(n);
  try {
    return CurveSpec(n, base[0], base[1], std::move(prep));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const ArcSpec& a) {
  return Json{{"punctures", a.punctures}, {"base", {a.left, a.left + 1}}, {"prep", to_json(a.prep)}};
}

ArcSpec arc_from_json(const Json& j) {
  const int n = int_field(j, "punctures");
  const std::vector<int> base = int_list(field(j, "base"), "base");
  if (base.size() != 2 || base[1] != base[0] + 1) throw ParseError("arc base must be [i, i+1]");
  BraidWord prep = j.contains("prep") ? braid_from_json(j.at("prep")) : BraidWord(n);
  try {
    return ArcSpec(n, base[0], std::move(prep));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim(); ++k) {
      Json entry = Json::object();
      const LaurentPoly& p = m.at(i, k);
      if (!p.is_zero()) {
        for (int e = p.low(); e <= p.high(); ++e) {
          const BigInt c = p.coeff(e);
          if (c != 0) entry[std::to_string(e)] = big_to_json(c);
        }
      }
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

LaurentMatrix laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const int n = static_cast<int>(j.size());
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix must be square");
    for (int k = 0; k < n; ++k) {
      const Json& entry = row.at(static_cast<std::size_t>(k));
      if (!entry.is_object()) throw ParseError("matrix entries must be exponent maps");
      LaurentPoly p;
      for (const auto& [exp, coeff] : entry.items()) {
        int e = 0;
        try {
          std::size_t used = 0;
          e = std::stoi(exp, &used);
          if (used != exp.size()) throw std::invalid_argument(exp);
        } catch (const std::exception&) {
          throw ParseError("bad exponent '" + exp + "'");
        }
        p += LaurentPoly::monomial(big_from_json(coeff), e);
      }
      m.at(i, k) = std::move(p);
    }
  }
  return m;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(big_to_json(x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sitwist
