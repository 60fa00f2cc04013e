#pragma once

#include <string>
#include <vector>

#include "qjack/bigint.hpp"

namespace qjack {

// Univariate polynomial over the integers with arbitrary-precision
// coefficients.  Coefficients are stored dense in ascending degree order and
// trailing zeros are always stripped, so two equal polynomials compare equal
// structurally.  The zero polynomial has an empty coefficient vector and
// degree -1.
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(long value);                       // NOLINT: implicit by design
  IntPoly(BigInt value);                     // NOLINT: implicit by design
  explicit IntPoly(std::vector<BigInt> coeffs);

  // The indeterminate itself.
  static IntPoly variable();
  static IntPoly monomial(BigInt coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^k, zero outside the stored range.
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  // this / content(), keeping the sign of each coefficient.
  IntPoly primitive_part() const;

  // Quotient when `divisor` divides exactly; throws std::logic_error if not.
  IntPoly divide_exact(const IntPoly& divisor) const;

  // Primitive gcd with positive leading coefficient (0 if both are 0).
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  BigRat eval(const BigRat& x) const;

  // Human-readable form, ascending powers: "3-a+2a^2".
  std::string to_string(char var = 'a') const;

private:
  void strip();
  std::vector<BigInt> coeffs_;
};

} // namespace qjack
