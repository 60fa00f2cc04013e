#include "qjack/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qjack {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

IntPoly::IntPoly(long value) {
  if (value != 0) coeffs_.push_back(BigInt(value));
}

IntPoly::IntPoly(BigInt value) {
  if (value != 0) coeffs_.push_back(std::move(value));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(BigInt coeff, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (coeff == 0) return IntPoly();
  std::vector<BigInt> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return IntPoly(std::move(c));
}

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const BigInt& IntPoly::coeff(int k) const {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<size_t>(k)];
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

void IntPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  strip();
  return *this;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = big_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  if (g == 1) return *this;
  IntPoly r(*this);
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("divide_exact: division by zero polynomial");
  if (is_zero()) return IntPoly();
  int dq = degree() - divisor.degree();
  if (dq < 0) throw std::logic_error("divide_exact: not divisible (degree)");
  IntPoly rem(*this);
  std::vector<BigInt> q(static_cast<size_t>(dq) + 1);
  const BigInt& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    BigInt c = rem.leading();
    if (c % lead != 0) throw std::logic_error("divide_exact: not divisible (coefficient)");
    c /= lead;
    int k = rem.degree() - divisor.degree();
    q[static_cast<size_t>(k)] = c;
    rem -= IntPoly::monomial(c, k) * divisor;
  }
  if (!rem.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b > ...), used by the primitive
// remainder sequence in gcd.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int k = a.degree() - b.degree();
    IntPoly t = IntPoly::monomial(a.leading(), k) * b;
    a = a * IntPoly(lb) - t;
  }
  return a;
}

} // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.is_zero()) u = IntPoly();
  while (!v.is_zero()) {
    IntPoly r = pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  if (u.leading() < 0) u = -u;
  return u;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + BigRat(*it);
  }
  return acc;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

} // namespace qjack
