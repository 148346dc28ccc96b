#pragma once

#include <string>
#include <vector>

#include "sitwist/bigint.hpp"
#include "sitwist/braid.hpp"

namespace sitwist {

// Integer Laurent polynomial in t, stored densely from the lowest exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(BigInt coeff, int exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Lowest and highest exponents with nonzero coefficient; undefined for 0.
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  // Multiplication by t^k.
  LaurentPoly shifted(int k) const;

  BigInt evaluate(const BigInt& t0) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

std::string to_string(const LaurentPoly& p);

class LaurentMatrix {
 public:
  explicit LaurentMatrix(int dim);
  static LaurentMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  const LaurentPoly& at(int row, int col) const;
  LaurentPoly& at(int row, int col);

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  int dim_;
  std::vector<LaurentPoly> entries_;
};

using IntMatrix = std::vector<std::vector<BigInt>>;

// Unreduced Burau representation: sigma_i acts by the block
// [[1-t, t], [1, 0]] on coordinates i, i+1. A homomorphism for the
// functional product: burau_unreduced(a * b) = burau_unreduced(a) burau_unreduced(b).
LaurentMatrix burau_unreduced(const BraidWord& w);
// Reduced (n-1)-dimensional Burau: sigma_i changes only row i, to
// t e_{i-1} - t e_i + e_{i+1} (terms outside 1..n-1 dropped).
LaurentMatrix burau_reduced(const BraidWord& w);

LaurentPoly determinant(const LaurentMatrix& m);
// Substitutes t = t0; throws DomainError for t0 = 0 or a non-integral entry.
IntMatrix evaluate_at(const LaurentMatrix& m, long t0);

// Pure, and the reduced Burau image at t = -1 is the identity.
bool is_torelli_shadow(const BraidWord& w);

}  // namespace sitwist
