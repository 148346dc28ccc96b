#include "sitwist/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "sitwist/error.hpp"

namespace sitwist {

namespace {

void check_rank(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) {
    throw DomainError("free group rank mismatch: " + std::to_string(u.rank()) + " vs " +
                      std::to_string(v.rank()));
  }
}

void push_reduced(std::vector<int>& out, std::span<const int> in) {
  for (int l : in) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("free group rank must be positive");
}

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank < 1) throw DomainError("free group rank must be positive");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > rank_) {
      throw DomainError("free generator " + std::to_string(l) + " out of range for rank " +
                        std::to_string(rank_));
    }
  }
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  return FreeWord(rank, {sign < 0 ? -index : index});
}

FreeWord fg_reduce(const FreeWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  push_reduced(out, w.letters());
  return FreeWord(w.rank(), std::move(out));
}

bool fg_equal(const FreeWord& u, const FreeWord& v) {
  check_rank(u, v);
  return fg_reduce(u) == fg_reduce(v);
}

FreeWord fg_multiply(const FreeWord& u, const FreeWord& v) {
  check_rank(u, v);
  std::vector<int> out;
  push_reduced(out, u.letters());
  push_reduced(out, v.letters());
  return FreeWord(u.rank(), std::move(out));
}

FreeWord fg_inverse(const FreeWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& l : out) l = -l;
  return FreeWord(w.rank(), std::move(out));
}

FreeWord fg_power(const FreeWord& w, int k) {
  const FreeWord base = k < 0 ? fg_inverse(w) : w;
  FreeWord out(w.rank());
  for (int r = 0; r < std::abs(k); ++r) out = out * base;
  return out;
}

FreeWord fg_commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * fg_inverse(u) * fg_inverse(v);
}

FreeWord fg_conjugate(const FreeWord& w, const FreeWord& g) { return g * w * fg_inverse(g); }

FreeWord witt_hall_expand_left(const FreeWord& x, const FreeWord& y, const FreeWord& z) {
  return fg_conjugate(fg_commutator(y, z), x) * fg_commutator(x, z);
}

FreeWord witt_hall_expand_right(const FreeWord& x, const FreeWord& y, const FreeWord& z) {
  return fg_commutator(x, y) * fg_conjugate(fg_commutator(x, z), y);
}

FreeWord square_commutator_expansion(const FreeWord& x, const FreeWord& y) {
  const FreeWord c = fg_commutator(x, y);
  return fg_conjugate(c, x) * fg_conjugate(c, x * y) * c * fg_conjugate(c, y);
}

bool verify_word_identity(const FreeWord& lhs, const FreeWord& rhs) { return fg_equal(lhs, rhs); }

FreeWord parse_free_word(std::string_view text, int rank) {
  if (rank < 1) throw DomainError("free group rank must be positive");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    const auto fail = [&] { throw ParseError("malformed free-group token '" + std::string(token) + "'"); };
    if (token.size() < 2 || token[0] != 'x') fail();
    const std::size_t caret = token.find('^');
    const std::string_view index_part = token.substr(1, caret == std::string_view::npos ? token.npos : caret - 1);
    int index = 0;
    auto [p1, e1] = std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);
    if (e1 != std::errc() || p1 != index_part.data() + index_part.size() || index_part.empty()) fail();
    int exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view exp_part = token.substr(caret + 1);
      if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
      auto [p2, e2] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
      if (e2 != std::errc() || p2 != exp_part.data() + exp_part.size() || exp_part.empty()) fail();
    }
    if (index < 1 || index > rank) {
      throw ParseError("free generator x" + std::to_string(index) + " out of range for rank " +
                       std::to_string(rank));
    }
    for (int r = 0; r < std::abs(exponent); ++r) letters.push_back(exponent < 0 ? -index : index);
    pos = end;
  }
  return FreeWord(rank, std::move(letters));
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

std::vector<int> cyclic_normal_form(const FreeWord& w) {
  const auto cyclically_reduce = [](std::vector<int> v) {
    std::size_t lo = 0;
    std::size_t hi = v.size();
    while (hi - lo > 1 && v[lo] == -v[hi - 1]) {
      ++lo;
      --hi;
    }
    return std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(lo),
                            v.begin() + static_cast<std::ptrdiff_t>(hi));
  };
  const FreeWord r = fg_reduce(w);
  const std::vector<int> forward = cyclically_reduce(std::vector<int>(r.letters().begin(), r.letters().end()));
  std::vector<int> backward(forward.rbegin(), forward.rend());
  for (int& l : backward) l = -l;
  std::vector<int> best = forward;
  for (const std::vector<int>* v : {&forward, static_cast<const std::vector<int>*>(&backward)}) {
    for (std::size_t k = 0; k < v->size(); ++k) {
      std::vector<int> rot(v->begin() + static_cast<std::ptrdiff_t>(k), v->end());
      rot.insert(rot.end(), v->begin(), v->begin() + static_cast<std::ptrdiff_t>(k));
      if (rot < best) best = std::move(rot);
    }
  }
  return best;
}

FreeWord apply_artin(const FreeWord& w, const BraidWord& b) {
  if (b.strands() != w.rank()) throw DomainError("Artin action: rank and strand count differ");
  std::vector<int> cur(w.letters().begin(), w.letters().end());
  std::vector<int> next;
  for (Letter l : b.letters()) {
    const int i = std::abs(l);
    next.clear();
    for (int g : cur) {
      const int a = std::abs(g);
      std::vector<int> img;
      if (l > 0) {
        if (a == i) {
          img = {i, i + 1, -i};
        } else if (a == i + 1) {
          img = {i};
        } else {
          img = {a};
        }
      } else {
        if (a == i) {
          img = {i + 1};
        } else if (a == i + 1) {
          img = {-(i + 1), i, i + 1};
        } else {
          img = {a};
        }
      }
      if (g < 0) {
        std::reverse(img.begin(), img.end());
        for (int& x : img) x = -x;
      }
      push_reduced(next, img);
    }
    cur.swap(next);
  }
  return FreeWord(w.rank(), std::move(cur));
}

bool artin_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw DomainError("artin_equal: strand count mismatch");
  const BraidWord d = then(inverse(b), a);
  for (int k = 1; k <= a.strands(); ++k) {
    const FreeWord x = FreeWord::generator(a.strands(), k);
    if (!(apply_artin(x, d) == x)) return false;
  }
  return true;
}

}  // namespace sitwist
