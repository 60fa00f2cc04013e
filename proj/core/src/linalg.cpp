#include "qjack/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qjack {

RatFun det(RatMat m) {
  size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  }
  if (n == 0) return RatFun(1);
  RatFun result(1);
  bool negate = false;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return RatFun();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      negate = !negate;
    }
    const RatFun& p = m[col][col];
    result *= p;
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      RatFun f = m[r][col] / p;
      for (size_t c = col + 1; c < n; ++c) {
        if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
      }
      m[r][col] = RatFun();
    }
  }
  return negate ? -result : result;
}

IntPoly det_bareiss(std::vector<std::vector<IntPoly>> m) {
  size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix not square");
  }
  if (n == 0) return IntPoly(1);
  bool negate = false;
  IntPoly prev(1);
  for (size_t col = 0; col + 1 < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return IntPoly();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      negate = !negate;
    }
    const IntPoly p = m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      for (size_t c = col + 1; c < n; ++c) {
        m[r][c] = (m[r][c] * p - m[r][col] * m[col][c]).divide_exact(prev);
      }
      m[r][col] = IntPoly();
    }
    prev = p;
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RatMat inverse(RatMat m) {
  size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("inverse: matrix not square");
  }
  RatMat inv(n, std::vector<RatFun>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = RatFun(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(inv[pivot], inv[col]);
    }
    RatFun p = m[col][col];
    for (size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatFun f = m[r][col];
      for (size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

} // namespace qjack
