#pragma once

#include <optional>

#include "qjack/jack.hpp"

namespace qjack {

// Free parameter of the lowering family L_n; an element of Q(a).
struct VirasoroParams {
  RatFun beta;
};

// 13 - 6(a + 1/a).
RatFun central_charge();

// Quadratic mode M_n f = sum_{i>=1} h_{-i} h_{i+n} f for n >= 0 and
// M_{-m} f = sum_{i>=1} h_{-i-m} h_i f for m > 0.  M_0 acts as a * weight on
// each graded component.  Result is in the p basis.
SymExpr m_op(int n, const SymExpr& f);

// Lowering operators:
//   L_1 = -a^{-1} M_1 + (beta - 2(1 - 1/a)) h_1
//   L_2 =  a^{-1} M_2 + (3(1 - 1/a) - beta) h_2 + a^{-1} h_1 h_1
//   L_n = [L_1, L_{n-1}] / (2 - n)            for n >= 3
// max_n bounds the recursion so runaway indices are rejected early.
SymExpr l_apply(const VirasoroParams& vp, int n, const SymExpr& f, int max_n = 4);

// Adjoints of multiplication by J_(1) and J_(2) (each p_k factor becomes h_k).
SymExpr j1_star(const SymExpr& f);
SymExpr j2_star(const SymExpr& f);

// Pairing identities tying the quadratic modes to the multiplication
// adjoints; e(la) is the eigenvalue of D on the shape la:
//   <M_1 J_la, J_mu> = (2a)^{-1} (e_la - e_mu - e_(1)) <J_(1)* J_la, J_mu>
//   <M_2 J_la, J_mu> = (4a^2)^{-1} (e_la - e_mu - e_(2)) <J_(2)* J_la, J_mu>
//                      - a^{-1} <M_1 J_(1)* J_la, J_mu>
bool m1_pairing_ok(const Partition& la, const Partition& mu);
bool m2_pairing_ok(const Partition& la, const Partition& mu);

// (r+1) - (1+s)/a, the parameter that makes J of the rectangle (r^s) a
// highest-weight null state for the lowering family.
RatFun singular_beta_formula(int r, int s);

// Solves the affine system L_1 J_la = A + beta B = 0 coefficient-wise; empty
// when the system is inconsistent.
std::optional<RatFun> l1_vanishing_beta(const Partition& la);

// The L_1 solution when L_2 also annihilates J_la there; empty otherwise.
std::optional<RatFun> singular_parameter(const Partition& la);

struct SingularCheck {
  Partition shape;
  RatFun beta_formula;
  bool has_beta = false;          // affine L_1 system solvable
  RatFun beta;                    // its solution when solvable
  bool l2_vanishes = false;       // L_2 J also zero at that beta
  bool matches_formula = false;
  bool is_singular() const { return has_beta && l2_vanishes; }
};

SingularCheck singular_check(int r, int s);

} // namespace qjack
