#include "qjack/virasoro.hpp"

#include <stdexcept>

namespace qjack {

namespace {
const RatFun& alpha() {
  static const RatFun a = RatFun::alpha();
  return a;
}
}  // namespace

RatFun central_charge() {
  return RatFun(13) - RatFun(6) * (alpha() + alpha().inverse());
}

SymExpr m_op(int n, const SymExpr& f) {
  SymExpr g = to_p(f);
  const int w = g.max_weight();
  SymExpr out(Basis::Power);
  if (n >= 0) {
    for (int i = 1; i + n <= w; ++i) {
      SymExpr t = heis(i + n, g);
      if (t.is_zero()) continue;
      out += heis(-i, t);
    }
  } else {
    for (int i = 1; i <= w; ++i) {
      SymExpr t = heis(i, g);
      if (t.is_zero()) continue;
      out += heis(n - i, t);
    }
  }
  return out;
}

SymExpr l_apply(const VirasoroParams& vp, int n, const SymExpr& f, int max_n) {
  if (n < 1) throw std::invalid_argument("l_apply: index must be positive");
  if (n > max_n) throw std::invalid_argument("l_apply: index above max_n");
  SymExpr g = to_p(f);
  const RatFun inv_a = alpha().inverse();
  if (n == 1) {
    SymExpr out = m_op(1, g).scaled(-inv_a);
    out += heis(1, g).scaled(vp.beta - RatFun(2) * (RatFun(1) - inv_a));
    return out;
  }
  if (n == 2) {
    SymExpr out = m_op(2, g).scaled(inv_a);
    out += heis(2, g).scaled(RatFun(3) * (RatFun(1) - inv_a) - vp.beta);
    out += heis(1, heis(1, g)).scaled(inv_a);
    return out;
  }
  SymExpr lhs = l_apply(vp, 1, l_apply(vp, n - 1, g, max_n), max_n);
  SymExpr rhs = l_apply(vp, n - 1, l_apply(vp, 1, g, max_n), max_n);
  return (lhs - rhs).scaled(RatFun::fraction(1, 2 - n));
}

SymExpr j1_star(const SymExpr& f) { return adjoint_mul(jack_p(Partition({1}), JackNorm::J), f); }

SymExpr j2_star(const SymExpr& f) { return adjoint_mul(jack_p(Partition({2}), JackNorm::J), f); }

bool m1_pairing_ok(const Partition& la, const Partition& mu) {
  SymExpr jla = jack_p(la, JackNorm::J);
  SymExpr jmu = jack_p(mu, JackNorm::J);
  RatFun lhs = inner(m_op(1, jla), jmu);
  RatFun factor = (eig(la) - eig(mu) - eig(Partition({1}))) / (RatFun(2) * alpha());
  RatFun rhs = factor * inner(j1_star(jla), jmu);
  return lhs == rhs;
}

bool m2_pairing_ok(const Partition& la, const Partition& mu) {
  SymExpr jla = jack_p(la, JackNorm::J);
  SymExpr jmu = jack_p(mu, JackNorm::J);
  RatFun lhs = inner(m_op(2, jla), jmu);
  RatFun factor = (eig(la) - eig(mu) - eig(Partition({2}))) / (RatFun(4) * alpha() * alpha());
  RatFun rhs = factor * inner(j2_star(jla), jmu) -
               inner(m_op(1, j1_star(jla)), jmu) * alpha().inverse();
  return lhs == rhs;
}

RatFun singular_beta_formula(int r, int s) {
  return RatFun(r + 1) - RatFun(1 + s) * alpha().inverse();
}

std::optional<RatFun> l1_vanishing_beta(const Partition& la) {
  SymExpr j = jack_p(la, JackNorm::J);
  SymExpr b = heis(1, j);  // coefficient of beta in L_1 J
  SymExpr a = l_apply(VirasoroParams{RatFun()}, 1, j);
  if (b.is_zero()) {
    if (a.is_zero()) return RatFun();
    return std::nullopt;
  }
  const auto& lead = *b.terms().begin();
  RatFun beta = -(a.coeff(lead.first) / lead.second);
  if (!(a + b.scaled(beta)).is_zero()) return std::nullopt;
  return beta;
}

std::optional<RatFun> singular_parameter(const Partition& la) {
  auto beta = l1_vanishing_beta(la);
  if (!beta) return std::nullopt;
  SymExpr l2 = l_apply(VirasoroParams{*beta}, 2, jack_p(la, JackNorm::J));
  if (!l2.is_zero()) return std::nullopt;
  return beta;
}

SingularCheck singular_check(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("singular_check: need r, s >= 1");
  SingularCheck out;
  out.shape = Partition(std::vector<int>(static_cast<size_t>(s), r));
  out.beta_formula = singular_beta_formula(r, s);
  auto beta = l1_vanishing_beta(out.shape);
  if (!beta) return out;
  out.has_beta = true;
  out.beta = *beta;
  SymExpr l2 = l_apply(VirasoroParams{*beta}, 2, jack_p(out.shape, JackNorm::J));
  out.l2_vanishes = l2.is_zero();
  out.matches_formula = (out.beta == out.beta_formula);
  return out;
}

} // namespace qjack
