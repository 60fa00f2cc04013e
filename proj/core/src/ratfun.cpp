#include "qjack/ratfun.hpp"

#include <stdexcept>
#include <utility>

namespace qjack {

RatFun::RatFun(const BigRat& value)
    : num_(BigInt(boost::multiprecision::numerator(value))),
      den_(BigInt(boost::multiprecision::denominator(value))) {
  // cpp_rational is already reduced with positive denominator.
}

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (!den_.is_one()) {
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
    BigInt c = big_gcd(num_.content(), den_.content());
    if (c > 1) {
      num_ = num_.divide_exact(IntPoly(c));
      den_ = den_.divide_exact(IntPoly(c));
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

bool RatFun::is_nonneg_integer_poly() const {
  if (!den_.is_one()) return false;
  for (const auto& c : num_.coeffs()) {
    if (c < 0) return false;
  }
  return true;
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  if (den_.is_zero()) throw std::domain_error("RatFun: division by zero");
  normalize();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
  return RatFun(den_, num_);
}

BigRat RatFun::eval_at(const BigRat& x) const {
  BigRat d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatFun: pole at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFun::to_string(char var) const {
  if (den_.is_one()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  bool n_paren = num_.degree() > 0 && n.find_first_of("+-", 1) != std::string::npos;
  bool d_paren = den_.degree() > 0;
  std::string out;
  if (n_paren) out += "(" + n + ")"; else out += n;
  out += "/";
  if (d_paren) out += "(" + d + ")"; else out += d;
  return out;
}

} // namespace qjack
