#pragma once

#include <map>
#include <string>

#include "qjack/partition.hpp"

namespace qjack {

// Bases for symmetric functions over Q(a):
//   Power    p_la, products of power sums (the computational home)
//   Monomial m_la
//   Homog    q_la = Q_{la_1} ... Q_{la_l}, products of the one-row family
//            Q_n = sum over la of n  a^{-l(la)} z_la^{-1} p_la
enum class Basis { Power, Monomial, Homog };

char basis_char(Basis b);
Basis basis_from_char(char c);

// Finite linear combination of basis elements with RatFun coefficients.
// Terms with zero coefficient are never stored.  Keys may mix weights; all
// operations act per graded component where that matters.
class SymExpr {
public:
  explicit SymExpr(Basis b = Basis::Power) : basis_(b) {}

  static SymExpr zero(Basis b) { return SymExpr(b); }
  static SymExpr unit(Basis b) { return term(b, Partition(), RatFun(1)); }
  static SymExpr term(Basis b, const Partition& la, const RatFun& c);

  Basis basis() const { return basis_; }
  const std::map<Partition, RatFun, PartitionLess>& terms() const { return terms_; }
  RatFun coeff(const Partition& la) const;
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // Largest key weight present (zero for the zero expression).
  int max_weight() const;
  // True iff every key has the same weight, reported through *weight.
  bool is_homogeneous(int* weight = nullptr) const;

  void add_term(const Partition& la, const RatFun& c);

  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  SymExpr scaled(const RatFun& c) const;

  bool operator==(const SymExpr& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }
  bool operator!=(const SymExpr& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Basis basis_;
  std::map<Partition, RatFun, PartitionLess> terms_;
};

// One-row generator Q_n expanded in the p basis; Q_0 = 1 and Q_n = 0 for n < 0.
SymExpr qn_to_p(int n);

// Basis conversions.  q -> p and m -> p are exact expansions; p -> q uses the
// expansion of p_n over q_mu; to_m reads coefficients off with the pairing
// <f, q_nu> (duality <q_la, m_nu> = delta).
SymExpr q_to_p(const SymExpr& f);
SymExpr p_to_q(const SymExpr& f);
SymExpr m_to_p(const SymExpr& f);
SymExpr to_p(const SymExpr& f);
SymExpr to_m(const SymExpr& f);
SymExpr to_basis(const SymExpr& f, Basis target);

// Product; inputs are converted to the p basis, result is in the p basis.
SymExpr mul(const SymExpr& f, const SymExpr& g);

// The alpha-deformed power-sum pairing <p_la, p_mu> = delta a^{l(la)} z_la.
RatFun inner(const SymExpr& f, const SymExpr& g);

// Heisenberg modes: for n > 0, h_n = n a d/dp_n and h_{-n} multiplies by p_n;
// n = 0 is rejected.  Result is in the p basis.
SymExpr heis(int n, const SymExpr& f);

// Adjoint of multiplication by g: each p_k factor becomes h_k.
SymExpr adjoint_mul(const SymExpr& g, const SymExpr& f);

// Evaluates every coefficient at a rational alpha (throws on a pole);
// coefficients stay RatFun-valued constants.
SymExpr eval_alpha(const SymExpr& f, const BigRat& alpha_value);

} // namespace qjack
