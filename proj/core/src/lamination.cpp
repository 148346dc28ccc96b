#include "sitwist/lamination.hpp"

#include <cstdlib>
#include <string>

#include "sitwist/error.hpp"

namespace sitwist {

namespace {

BigInt pos(const BigInt& x) { return x > 0 ? x : BigInt(0); }
BigInt neg(const BigInt& x) { return x < 0 ? x : BigInt(0); }

// sigma_i for 2 <= i <= n-2 acting on (a_{i-1}, b_{i-1}, a_i, b_i).
void interior_positive(BigInt& a1, BigInt& b1, BigInt& a2, BigInt& b2) {
  const BigInt t = a1 - a2 - pos(b2) + neg(b1);
  const BigInt na1 = a1 - pos(b1) - pos(pos(b2) + t);
  const BigInt nb1 = b2 + neg(t);
  const BigInt na2 = a2 - neg(b2) + pos(t - neg(b1));
  const BigInt nb2 = b1 - neg(t);
  a1 = na1;
  b1 = nb1;
  a2 = na2;
  b2 = nb2;
}

}  // namespace

LoopCoordinates::LoopCoordinates(int punctures, std::vector<BigInt> a, std::vector<BigInt> b)
    : punctures_(punctures), a_(std::move(a)), b_(std::move(b)) {
  if (punctures < 3) throw DomainError("loop coordinates need at least 3 punctures");
  const auto m = static_cast<std::size_t>(punctures - 2);
  if (a_.size() != m || b_.size() != m) {
    throw DomainError("expected " + std::to_string(m) + " a- and b-coordinates");
  }
  bool nonzero = false;
  for (std::size_t k = 0; k < m; ++k) nonzero = nonzero || a_[k] != 0 || b_[k] != 0;
  if (!nonzero) throw DomainError("the zero vector is not an essential multicurve");
}

LoopCoordinates LoopCoordinates::boundary_parallel(int punctures) {
  if (punctures < 3) throw DomainError("loop coordinates need at least 3 punctures");
  LoopCoordinates c;
  c.punctures_ = punctures;
  c.boundary_ = true;
  c.a_.assign(static_cast<std::size_t>(punctures - 2), BigInt(0));
  c.b_.assign(static_cast<std::size_t>(punctures - 2), BigInt(0));
  return c;
}

LoopCoordinates round_curve(int n, int i, int j) {
  if (n < 3) throw DomainError("round_curve needs at least 3 punctures");
  if (i < 1 || j > n || i >= j) throw DomainError("round_curve: need 1 <= i < j <= n");
  if (i == 1 && j == n) return LoopCoordinates::boundary_parallel(n);
  std::vector<BigInt> a(static_cast<std::size_t>(n - 2), BigInt(0));
  std::vector<BigInt> b(a);
  if (i >= 2) b[static_cast<std::size_t>(i - 2)] = -1;
  if (j <= n - 1) b[static_cast<std::size_t>(j - 2)] = 1;
  return LoopCoordinates(n, std::move(a), std::move(b));
}

void apply_in_place(LoopCoordinates& c, Letter letter) {
  const int n = c.punctures_;
  const int i = std::abs(letter);
  if (i < 1 || i > n - 1) {
    throw DomainError("generator index " + std::to_string(i) + " out of range for " +
                      std::to_string(n) + " punctures");
  }
  if (c.boundary_) return;
  auto& a = c.a_;
  auto& b = c.b_;
  if (i == 1) {
    BigInt& A = a[0];
    BigInt& B = b[0];
    if (letter > 0) {
      BigInt nb = A + pos(B);
      A = -B + pos(nb);
      B = std::move(nb);
    } else {
      BigInt nb = -A + pos(B);
      A = B - pos(nb);
      B = std::move(nb);
    }
  } else if (i == n - 1) {
    const auto k = static_cast<std::size_t>(n - 3);
    BigInt& A = a[k];
    BigInt& B = b[k];
    if (letter > 0) {
      BigInt nb = A + neg(B);
      A = -B + neg(nb);
      B = std::move(nb);
    } else {
      BigInt nb = -A + neg(B);
      A = B - neg(nb);
      B = std::move(nb);
    }
  } else {
    const auto k = static_cast<std::size_t>(i - 2);
    if (letter > 0) {
      interior_positive(a[k], b[k], a[k + 1], b[k + 1]);
    } else {
      // sigma_i^{-1} is the conjugate of sigma_i by the reflection a -> -a
      a[k] = -a[k];
      a[k + 1] = -a[k + 1];
      interior_positive(a[k], b[k], a[k + 1], b[k + 1]);
      a[k] = -a[k];
      a[k + 1] = -a[k + 1];
    }
  }
}

LoopCoordinates apply_generator(const LoopCoordinates& c, int index, int sign) {
  LoopCoordinates out = c;
  apply_in_place(out, sign < 0 ? -index : index);
  return out;
}

LoopCoordinates apply_braid(const LoopCoordinates& c, const BraidWord& w) {
  if (w.strands() != c.punctures()) {
    throw DomainError("braid on " + std::to_string(w.strands()) + " strands applied to a curve in " +
                      std::to_string(c.punctures()) + "-punctured disk");
  }
  LoopCoordinates out = c;
  for (Letter l : w.letters()) apply_in_place(out, l);
  return out;
}

bool curves_equal(const LoopCoordinates& x, const LoopCoordinates& y) {
  if (x.punctures() != y.punctures()) throw DomainError("curves live in different disks");
  return x == y;
}

BigInt norm(const LoopCoordinates& c) {
  BigInt sum = 0;
  for (const auto& v : c.a()) sum += abs(v);
  for (const auto& v : c.b()) sum += abs(v);
  return sum;
}

}  // namespace sitwist
