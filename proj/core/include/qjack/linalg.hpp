#pragma once

#include <vector>

#include "qjack/ratfun.hpp"

namespace qjack {

using RatMat = std::vector<std::vector<RatFun>>;

// Exact determinant by Gaussian elimination with row pivoting.
RatFun det(RatMat m);

// Fraction-free determinant (Bareiss) for integer-polynomial matrices; every
// intermediate division is exact, so no rational normalization is needed.
IntPoly det_bareiss(std::vector<std::vector<IntPoly>> m);

// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if the
// matrix is singular.
RatMat inverse(RatMat m);

} // namespace qjack
