#pragma once

#include <map>
#include <optional>
#include <string>

#include "qjack/laplace.hpp"

namespace qjack {

// Normalizations of the Jack family:
//   P  monic in the m basis (coefficient of m_la is 1)
//   Q  monic in the q basis (coefficient of q_la is 1), dual to P
//   J  integral form, coefficient of m_{1^n} equal to n!
enum class JackNorm { P, Q, J };

char norm_char(JackNorm n);
std::optional<JackNorm> norm_from_char(char c);

enum class JackMethod { Iteration, Determinant, GramSchmidt, Filtration };

std::string method_name(JackMethod m);
std::optional<JackMethod> method_from_name(const std::string& name);

// Scale factor carrying the P normalization to the requested one:
//   P -> 1,  Q -> h_low/h_up,  J -> h_low
// where h_low / h_up are the full lower / upper hook products of la.
RatFun norm_scalar(const Partition& la, JackNorm norm);

// <X_la, X_la> for the requested normalization:
//   P -> h_up/h_low,  Q -> h_low/h_up,  J -> h_low * h_up
RatFun self_inner(const Partition& la, JackNorm norm);

struct JackExpansion {
  Partition shape;
  JackNorm norm = JackNorm::Q;
  JackMethod method = JackMethod::Iteration;
  SymExpr expr{Basis::Homog};
};

// Triangular sweep of the eigenvalue recurrence over the q basis:
//   c_mu = [ sum_{nu : mu in moving_up_set(nu)} c_nu r_{nu,mu} ] / (e'_la - e'_mu)
// visiting mu in ascending reverse-lexicographic order from la.  A vanishing
// numerator short-circuits the division, so pairs of incomparable partitions
// with equal e' (they exist from weight 6 on) stay harmless.  Returns Q_la
// over the q basis.
JackExpansion jack_iteration(const Partition& la);
JackExpansion jack_iteration_with_table(const Partition& la, const ActionTable& table);

// Cofactor solution of the same eigenvalue problem restricted to the
// dominance cone {mu : mu >= la}: the coefficient of q_mu is a signed minor
// of the restricted action matrix divided by the principal minor.  Returns
// Q_la over the q basis.
JackExpansion jack_determinant(const Partition& la);

// Orthogonalization of the m basis against the alpha-deformed power-sum
// pairing, taken in ascending reverse-lexicographic order (a linear extension
// of dominance).  Uses only basis conversions and the pairing, none of the
// operator machinery, which makes it an independent cross-check.  Returns
// P_la over the m basis.
JackExpansion jack_gram_schmidt(const Partition& la);

enum class FiltrationTarget { QExpansion, MExpansion };

// Sums over chains in the moving-up graph with one divided difference per
// step (see filtration_start_sums / filtration_end_sums).  QExpansion yields
// Q_la over the q basis, MExpansion yields J_la over the m basis via
// v_{la,mu} = h_low(la) * end_sums(la)[mu].
JackExpansion jack_filtration(const Partition& la, FiltrationTarget target);

// start_sums(s)[mu] = sum over chains s -> mu of prod_steps r_step / (e'_s - e'_t)
// where t is the partition reached after the step; the empty chain gives
// start_sums(s)[s] = 1.  end_sums(la)[nu] sums over chains nu -> la with the
// divided difference anchored at the chain end: prod r_step / (e'_la - e'_f)
// with f the partition the step leaves from.  Both are memoized per endpoint.
std::map<Partition, RatFun, PartitionLess> filtration_start_sums(const Partition& start);
std::map<Partition, RatFun, PartitionLess> filtration_end_sums(const Partition& la);

JackExpansion renormalize(const JackExpansion& e, JackNorm to);
JackExpansion convert_basis(const JackExpansion& e, Basis to);

// One-call entry point: compute with the chosen method, renormalize, convert.
SymExpr jack(const Partition& la, JackNorm norm, Basis basis,
             JackMethod method = JackMethod::Iteration);

// Memoized p-basis expansion (iteration method under the hood).
SymExpr jack_p(const Partition& la, JackNorm norm);

// Explicit two-row expansion: Q_{(r,s)} = sum_{i=0..s} a_i q_{(r+i, s-i)}
// with, writing d = r - s,
//   a_i = (-1)^i (d+2i) [ prod_{j<i} (d+j)(1-j a) ] / [ i! prod_{j=1..i} (1+(d+j)a) ].
SymExpr two_row_q(int r, int s);

// Explicit two-column expansion for the conjugate of (r,s), r >= s >= 0:
//   J = sum_{i=0..s} b_{s-i} m_{(r+i, s-i)'},
//   b_k = (r+s-2k)! prod_{j=1..k} (s+1-j)(a + r+1-j).
SymExpr two_column_m(int r, int s);

} // namespace qjack
