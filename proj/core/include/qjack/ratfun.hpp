#pragma once

#include <string>

#include "qjack/intpoly.hpp"

namespace qjack {

// Element of Q(a): a quotient of integer polynomials kept in canonical form.
// After normalization num/den share no polynomial factor, the integer
// contents of num and den are coprime, and the leading coefficient of den is
// positive.  Equality of values is therefore structural equality.
class RatFun {
public:
  RatFun() : num_(), den_(1) {}
  RatFun(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  RatFun(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  RatFun(IntPoly value) : num_(std::move(value)), den_(1) {}  // NOLINT
  explicit RatFun(const BigRat& value);
  RatFun(IntPoly num, IntPoly den);

  static RatFun alpha() { return RatFun(IntPoly::variable()); }
  static RatFun fraction(long num, long den) { return RatFun(IntPoly(num), IntPoly(den)); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  // True iff the value lies in Z[a].
  bool is_integer_poly() const { return den_.is_one(); }
  // True iff the value lies in Z[a] with all coefficients >= 0.
  bool is_nonneg_integer_poly() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  RatFun inverse() const;

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Exact evaluation at a rational point; throws std::domain_error on a pole.
  BigRat eval_at(const BigRat& x) const;

  std::string to_string(char var = 'a') const;

private:
  void normalize();
  IntPoly num_, den_;
};

} // namespace qjack
