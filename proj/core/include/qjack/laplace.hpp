#pragma once

#include <memory>
#include <utility>

#include "qjack/symexpr.hpp"

namespace qjack {

// Eigenvalue of D(a) on the Jack function labelled la:
//   e_la = a^2 sum la_i^2 + a (|la| - 2 sum i la_i)
RatFun eig(const Partition& la);

// Eigenvalue of the reduced operator D'(a):
//   e'_la = (a/2) sum la_i^2 - sum i la_i
// For la > mu of equal weight, e'_la - e'_mu = s*a + t with s, t positive
// integers, which keeps every divided difference below well defined.
RatFun eig_prime(const Partition& la);

// D(a) acting on the p basis:
//   D = sum (i+j) a p_i p_j d/dp_{i+j}
//     + sum i j a^2 p_{i+j} d^2/dp_i dp_j
//     + a(a-1) sum k^2 p_k d/dp_k
SymExpr apply_d_p(const SymExpr& f);

// D(a) acting on the q basis:
//   D q_la = e_la q_la
//          + 2a sum_{i<j} sum_{k=1..la_j} (la_i - la_j + 2k) q_{sort(la + k e_i - k e_j)}
SymExpr apply_d_q(const SymExpr& f);

// Reduced action on the q basis (diagonal e', off-diagonal coefficients
// r_{la,mu} aggregated over part-value classes) and its transpose on the m
// basis: D' m_mu = e'_mu m_mu + sum over la with mu in moving_up_set(la).
SymExpr apply_dprime(const SymExpr& f);

// Sparse matrix of the reduced action on one weight: for each partition la
// (revlex order) the list of pairs (mu, r_{la,mu}) with mu in
// moving_up_set(la), plus the reverse view and the e' diagonal.
class ActionTable {
public:
  explicit ActionTable(int weight);

  // Process-wide memoized table (never mutated).
  static const ActionTable& get(int weight);

  int weight() const { return weight_; }
  const std::vector<Partition>& order() const { return order_; }
  int index_of(const Partition& la) const;
  const RatFun& eprime_at(int idx) const { return eprime_[static_cast<size_t>(idx)]; }
  const std::vector<std::pair<int, RatFun>>& up(int idx) const {
    return up_[static_cast<size_t>(idx)];
  }
  const std::vector<std::pair<int, RatFun>>& down(int idx) const {
    return down_[static_cast<size_t>(idx)];
  }

  // Rebuilds a table from externally stored off-diagonal coefficients; the
  // diagonal and orderings are recomputed.  Throws on malformed input.
  static ActionTable from_parts(int weight,
                                std::vector<std::vector<std::pair<int, RatFun>>> up);

  // Test hook: adds 1 to the first off-diagonal coefficient, keeping both
  // views consistent, so downstream consistency checks must fail.
  void bump_first_entry();

private:
  ActionTable() = default;
  void finish();  // fills index/down/eprime from weight_/order_/up_

  int weight_ = 0;
  std::vector<Partition> order_;
  std::map<Partition, int, PartitionLess> index_;
  std::vector<RatFun> eprime_;
  std::vector<std::vector<std::pair<int, RatFun>>> up_;
  std::vector<std::vector<std::pair<int, RatFun>>> down_;
};

// Product action helper A_{m,n} = sum_{i,j>=1} h_{-(i+j)} (h_i.Q_m)(h_j.Q_n)
// expanded over the q basis (requires m >= n >= 1).
SymExpr a_mn(int m, int n);

// Closed form for the coefficient of q_la in A_{m,n}: zero unless la is a
// partition of m+n with at most two rows dominating (m,n), in which case it
// is [la_1 (1 - delta_{m,la_1}) - la_2] a.
RatFun a_mn_closed(int m, int n, const Partition& la);

} // namespace qjack
