#pragma once

// Centrality, degree-bounded centralizers and centers.

#include <vector>

#include "ncaffine/ncpoly.hpp"

namespace ncaffine {

/// Monomials x^a y^b with a + b <= D, in normal order (largest first).
std::vector<Monomial> window_monomials(unsigned D);

/// f commutes with both generators.
bool is_central(const NcPoly& f);

/// Basis of {f : deg f <= D, fg = gf}, echelonized with leading coefficient 1 on the largest monomial.
std::vector<NcPoly> centralizer_basis(const NcPoly& g, unsigned D);

/// Basis of the central elements of degree at most D.
std::vector<NcPoly> center_basis(const Algebra& alg, unsigned D);

/// Degree of x^a y^b in a Z-grading compatible with the relation: b - a when alpha = beta = 0,
/// b when only beta is nonzero, a when only alpha is nonzero. Throws GradingUndefined otherwise.
long graded_degree(const AlgebraParams& p, const Monomial& m);

/// Monomials of the window lying in the graded component of degree k.
std::vector<Monomial> graded_component(const AlgebraParams& p, long k, unsigned D);

/// All terms of f share one graded degree.
bool is_homogeneous(const NcPoly& f);

}  // namespace ncaffine
