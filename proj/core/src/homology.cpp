#include "sitwist/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>

#include "sitwist/error.hpp"

namespace sitwist {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  LaurentPoly p(std::move(coeff));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

namespace {

void accumulate(LaurentPoly& into, const LaurentPoly& other, int sign, int& low, std::vector<BigInt>& c) {
  (void)into;
  const int lo = std::min(low, other.low());
  const int hi = std::max(low + static_cast<int>(c.size()) - 1, other.high());
  if (c.empty()) {
    low = other.low();
    for (int e = other.low(); e <= other.high(); ++e) c.push_back(sign > 0 ? other.coeff(e) : -other.coeff(e));
    return;
  }
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < c.size(); ++k) out[static_cast<std::size_t>(low - lo) + k] = std::move(c[k]);
  for (int e = other.low(); e <= other.high(); ++e) {
    if (sign > 0) {
      out[static_cast<std::size_t>(e - lo)] += other.coeff(e);
    } else {
      out[static_cast<std::size_t>(e - lo)] -= other.coeff(e);
    }
  }
  c = std::move(out);
  low = lo;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  accumulate(*this, other, 1, low_, coeffs_);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  accumulate(*this, other, -1, low_, coeffs_);
  normalize();
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.normalize();
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

BigInt LaurentPoly::evaluate(const BigInt& t0) const {
  if (is_zero()) return 0;
  if (t0 == 0) throw DomainError("cannot evaluate a Laurent polynomial at t = 0");
  // Horner on the coefficient list gives value * t0^{-low}
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
  if (low_ >= 0) {
    BigInt scale = 1;
    for (int k = 0; k < low_; ++k) scale *= t0;
    return acc * scale;
  }
  BigInt denom = 1;
  for (int k = 0; k < -low_; ++k) denom *= t0;
  if (acc % denom != 0) throw DomainError("evaluation is not an integer");
  return acc / denom;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.high(); e >= p.low(); --e) {
    const BigInt c = p.coeff(e);
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentMatrix::LaurentMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {
  if (dim < 0) throw DomainError("negative matrix dimension");
}

LaurentMatrix LaurentMatrix::identity(int dim) {
  LaurentMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

const LaurentPoly& LaurentMatrix::at(int row, int col) const {
  return entries_.at(static_cast<std::size_t>(row * dim_ + col));
}

LaurentPoly& LaurentMatrix::at(int row, int col) { return entries_.at(static_cast<std::size_t>(row * dim_ + col)); }

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimension mismatch");
  const int n = a.dim();
  LaurentMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

namespace {

const LaurentPoly kT = LaurentPoly::monomial(1, 1);
const LaurentPoly kTInv = LaurentPoly::monomial(1, -1);

}  // namespace

// Later letters multiply on the left, so each step is a row operation.
LaurentMatrix burau_unreduced(const BraidWord& w) {
  const int n = w.strands();
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (Letter l : w.letters()) {
    const int i = std::abs(l) - 1;
    for (int c = 0; c < n; ++c) {
      const LaurentPoly x = m.at(i, c);
      const LaurentPoly y = m.at(i + 1, c);
      if (x.is_zero() && y.is_zero()) continue;
      if (l > 0) {
        m.at(i, c) = x - x.shifted(1) + y.shifted(1);
        m.at(i + 1, c) = x;
      } else {
        m.at(i, c) = y;
        m.at(i + 1, c) = x.shifted(-1) + y - y.shifted(-1);
      }
    }
  }
  return m;
}

LaurentMatrix burau_reduced(const BraidWord& w) {
  const int d = w.strands() - 1;
  LaurentMatrix m = LaurentMatrix::identity(std::max(d, 0));
  for (Letter l : w.letters()) {
    const int i = std::abs(l) - 1;
    for (int c = 0; c < d; ++c) {
      LaurentPoly row;
      const LaurentPoly& mid = m.at(i, c);
      if (l > 0) {
        if (i > 0) row += m.at(i - 1, c).shifted(1);
        row -= mid.shifted(1);
        if (i + 1 < d) row += m.at(i + 1, c);
      } else {
        if (i > 0) row += m.at(i - 1, c);
        row -= mid.shifted(-1);
        if (i + 1 < d) row += m.at(i + 1, c).shifted(-1);
      }
      m.at(i, c) = std::move(row);
    }
  }
  return m;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  const int n = m.dim();
  if (n == 0) return LaurentPoly(1);
  if (n > 20) throw DomainError("determinant: dimension too large");
  // Laplace expansion along rows, memoised on the set of used columns.
  std::vector<LaurentPoly> dp(std::size_t{1} << n);
  dp[0] = LaurentPoly(1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    if (row == n) continue;
    int sign_count = 0;
    for (int col = n - 1; col >= 0; --col) {
      if (mask & (1u << col)) {
        ++sign_count;
        continue;
      }
      const LaurentPoly& e = m.at(row, col);
      if (e.is_zero()) continue;
      LaurentPoly term = dp[mask] * e;
      if (sign_count % 2 == 1) term = -term;
      dp[mask | (1u << col)] += term;
    }
  }
  return dp[(std::size_t{1} << n) - 1];
}

IntMatrix evaluate_at(const LaurentMatrix& m, long t0) {
  if (t0 == 0) throw DomainError("evaluate_at: t0 must be nonzero");
  IntMatrix out(static_cast<std::size_t>(m.dim()), std::vector<BigInt>(static_cast<std::size_t>(m.dim())));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).evaluate(BigInt(t0));
    }
  }
  return out;
}

bool is_torelli_shadow(const BraidWord& w) {
  if (!is_pure(w)) return false;
  const IntMatrix v = evaluate_at(burau_reduced(w), -1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace sitwist
