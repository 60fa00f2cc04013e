#pragma once

#include <vector>

#include "qjack/jack.hpp"

namespace qjack {

// <J_(n) J_mu, J_la> computed from the expanded product and the pairing.
RatFun pieri_direct(int n, const Partition& mu, const Partition& la);

// The same pairing in product form: zero unless la/mu is a horizontal strip
// of size n, otherwise
//   h_low^mu(unbottomed) h_up^mu(bottomed) a^n n! h_up^la(unbottomed) h_low^la(bottomed)
// where the cells of mu and la are split by the columns that la/mu meets.
RatFun pieri_hook(int n, const Partition& mu, const Partition& la);

// <J_mu J_nu, J_la> from the expanded product.
RatFun lr_direct(const Partition& mu, const Partition& nu, const Partition& la);

// One (tau1, tau2) summand of the chain-sum route through <Q_mu Q_nu, J_la>.
struct LRWitness {
  Partition tau1, tau2;
  RatFun contribution;  // already scaled; the witnesses sum to the result
};

// <J_mu J_nu, J_la> without expanding the product: chains rising from mu and
// nu are spliced by part-union and weighed by the chain sums ending at la,
//   <Q_mu Q_nu, J_la> = h_low(la) sum_{tau1,tau2} S_mu[tau1] S_nu[tau2] E_la[tau1 u tau2],
// then rescaled by h_up(mu) h_up(nu).
RatFun lr_filtration(const Partition& mu, const Partition& nu, const Partition& la,
                     std::vector<LRWitness>* witnesses = nullptr);

// Scans every shape of each weight up to max_weight and records violations of
// the integrality properties of the J normalization:
//  - each m coefficient divided by the multiplicity factorial of its index
//    must be a polynomial in a with nonnegative integer coefficients,
//  - each p coefficient must be a polynomial in a with integer coefficients.
struct IntegralityIssue {
  Partition shape;
  Partition index;
  std::string what;
};

struct IntegralityReport {
  int max_weight = 0;
  int shapes_checked = 0;
  int coefficients_checked = 0;
  std::vector<IntegralityIssue> issues;
  bool ok() const { return issues.empty(); }
};

IntegralityReport integrality_report(int max_weight);

} // namespace qjack
