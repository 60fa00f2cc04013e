#pragma once

// Independent oracle for symmetric-function coefficients: expand products of
// power sums in a fixed number of concrete variables and read monomial
// coefficients straight off the exponent vectors.  Everything here is integer
// arithmetic with no dependence on the library's basis-conversion code.

#include <map>
#include <vector>

#include "qjack/bigint.hpp"
#include "qjack/partition.hpp"

namespace oracle {

using Expo = std::vector<int>;                 // exponent vector, fixed length
using Poly = std::map<Expo, qjack::BigInt>;    // multivariate polynomial

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Expo e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r[e] += ca * cb;
    }
  }
  return r;
}

inline Poly power_sum(int k, int nvars) {
  Poly r;
  for (int i = 0; i < nvars; ++i) {
    Expo e(nvars, 0);
    e[static_cast<size_t>(i)] = k;
    r[e] += 1;
  }
  return r;
}

inline Poly power_sum_product(const qjack::Partition& la, int nvars) {
  Poly r;
  r[Expo(static_cast<size_t>(nvars), 0)] = 1;
  for (int part : la.parts()) r = poly_mul(r, power_sum(part, nvars));
  return r;
}

// [x^mu] f with mu padded by zeros; parts of mu must be weakly decreasing so
// the exponent vector is the canonical representative of its orbit.
inline qjack::BigInt monomial_coeff(const Poly& f, const qjack::Partition& mu, int nvars) {
  Expo e(static_cast<size_t>(nvars), 0);
  const auto& parts = mu.parts();
  for (size_t i = 0; i < parts.size(); ++i) e[i] = parts[i];
  auto it = f.find(e);
  return it == f.end() ? qjack::BigInt(0) : it->second;
}

} // namespace oracle
