#ifndef HOPFWREATH_LINALG_HPP
#define HOPFWREATH_LINALG_HPP

#include <vector>

#include "hopfwreath/linmap.hpp"

namespace hopfwreath {

/// Dense rational matrix, row major.
using Matrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form. Returns the pivot column of each
/// resulting nonzero row, in order.
std::vector<std::size_t> rref(Matrix& m);

/// Exact basis of {v : M(v) = 0}, expressed over the domain basis of M,
/// in the canonical form induced by reduced row echelon: one vector per
/// free column, scaled to leading coefficient +1 in domain order.
std::vector<LinComb> kernel_basis(const LinMap& m);

/// Some v with M(v) = y; free coordinates are set to zero.
/// Throws NoSolution when y is outside the image.
LinComb solve(const LinMap& m, const LinComb& y);

/// Rank of a family of combinations (over the union of their supports).
std::size_t rank(const std::vector<LinComb>& vecs);

/// Coordinates of x in the span of `basis`; throws NoSolution if x is
/// outside the span.
std::vector<Scalar> coordinates(const std::vector<LinComb>& basis, const LinComb& x);

} // namespace hopfwreath

#endif
