#include "ncaffine/linsolve.hpp"

namespace ncaffine {

std::vector<std::size_t> rref(Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const FieldElem inv = rows[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!rows[r][k].is_zero()) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElem f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Matrix nullspace(Matrix a, std::size_t cols, const FieldMode& mode) {
  const std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, FieldElem::zero(mode));
    v[f] = FieldElem::one(mode);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  rref(basis, cols);
  return basis;
}

}  // namespace ncaffine
