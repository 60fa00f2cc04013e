#include "qjack/structure.hpp"

#include <stdexcept>

namespace qjack {

RatFun pieri_direct(int n, const Partition& mu, const Partition& la) {
  if (n < 0) throw std::invalid_argument("pieri_direct: negative row");
  Partition row = n > 0 ? Partition({n}) : Partition();
  SymExpr prod = mul(jack_p(row, JackNorm::J), jack_p(mu, JackNorm::J));
  return inner(prod, jack_p(la, JackNorm::J));
}

RatFun pieri_hook(int n, const Partition& mu, const Partition& la) {
  if (n < 0) throw std::invalid_argument("pieri_hook: negative row");
  if (la.weight() != mu.weight() + n) return RatFun();
  if (n == 0) return la == mu ? self_inner(la, JackNorm::J) : RatFun();
  if (!is_horizontal_strip(mu, la, n)) return RatFun();
  BottomedSplit sp = bottomed_split(mu, la);
  RatFun v = hook_product(mu, sp.mu_unbottomed, HookKind::Lower) *
             hook_product(mu, sp.mu_bottomed, HookKind::Upper);
  v *= RatFun(IntPoly::monomial(factorial(static_cast<unsigned>(n)), n));
  v *= hook_product(la, sp.la_unbottomed, HookKind::Upper) *
       hook_product(la, sp.la_bottomed, HookKind::Lower);
  return v;
}

RatFun lr_direct(const Partition& mu, const Partition& nu, const Partition& la) {
  SymExpr prod = mul(jack_p(mu, JackNorm::J), jack_p(nu, JackNorm::J));
  return inner(prod, jack_p(la, JackNorm::J));
}

RatFun lr_filtration(const Partition& mu, const Partition& nu, const Partition& la,
                     std::vector<LRWitness>* witnesses) {
  if (witnesses) witnesses->clear();
  if (mu.weight() + nu.weight() != la.weight()) return RatFun();
  auto s_mu = filtration_start_sums(mu);
  auto s_nu = filtration_start_sums(nu);
  auto e_la = filtration_end_sums(la);
  RatFun scale = hook_product_full(la, HookKind::Lower) *
                 hook_product_full(mu, HookKind::Upper) *
                 hook_product_full(nu, HookKind::Upper);
  RatFun acc;
  for (const auto& [tau1, c1] : s_mu) {
    for (const auto& [tau2, c2] : s_nu) {
      auto it = e_la.find(union_parts(tau1, tau2));
      if (it == e_la.end()) continue;
      RatFun contrib = c1 * c2 * it->second * scale;
      if (contrib.is_zero()) continue;
      acc += contrib;
      if (witnesses) witnesses->push_back(LRWitness{tau1, tau2, contrib});
    }
  }
  return acc;
}

IntegralityReport integrality_report(int max_weight) {
  IntegralityReport rep;
  rep.max_weight = max_weight;
  for (int n = 0; n <= max_weight; ++n) {
    for (const auto& la : revlex_order(n)) {
      ++rep.shapes_checked;
      JackExpansion m_form = renormalize(jack_filtration(la, FiltrationTarget::MExpansion),
                                         JackNorm::J);
      for (const auto& [mu, c] : m_form.expr.terms()) {
        ++rep.coefficients_checked;
        RatFun scaled = c / RatFun(mu.mult_factorial());
        if (!scaled.is_nonneg_integer_poly()) {
          rep.issues.push_back({la, mu, "m coefficient / mult factorial not in N[a]"});
        }
      }
      SymExpr p_form = jack_p(la, JackNorm::J);
      for (const auto& [mu, c] : p_form.terms()) {
        ++rep.coefficients_checked;
        if (!c.is_integer_poly()) {
          rep.issues.push_back({la, mu, "p coefficient not in Z[a]"});
        }
      }
    }
  }
  return rep;
}

} // namespace qjack
