#pragma once

// Exact Gaussian elimination over FieldElem.

#include <vector>

#include "ncaffine/coeffs.hpp"

namespace ncaffine {

using Vector = std::vector<FieldElem>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; pivots are searched left to right. Returns pivot columns.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols);

/// Basis of {v : A v = 0} for an r x cols matrix, itself in reduced row echelon form
/// (leading entry 1 in the leftmost possible column).
Matrix nullspace(Matrix a, std::size_t cols, const FieldMode& mode);

}  // namespace ncaffine
