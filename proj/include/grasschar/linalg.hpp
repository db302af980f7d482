#pragma once

#include <vector>

#include "grasschar/exact_scalar.hpp"

namespace grasschar {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

Rational determinant(RationalMatrix a);

// Inverse of a square nonsingular matrix; throws singular_pairing otherwise.
RationalMatrix invert(RationalMatrix a);

// Solves a * x = b for square nonsingular a.
RationalVector solve(RationalMatrix a, RationalVector b);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity_matrix(size_t n);

} // namespace grasschar
