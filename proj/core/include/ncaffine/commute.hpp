#pragma once

// Engines for the fundamental product y^m x^n and multiplication built on them.

#include <string_view>
#include <optional>

#include "ncaffine/ncpoly.hpp"

namespace ncaffine {

enum class Engine {
  Auto,        // closed formula where one exists, pullback otherwise
  Rewrite,     // brute-force rewriting with the defining relation
  Formula,     // closed formulas of the multiplication tables
  Recurrence,  // coefficient recurrences (three Lie rows)
  Pullback,    // model formula transported along the verified isomorphism
};

std::string_view to_string(Engine e);
std::optional<Engine> engine_from_name(std::string_view name);

/// Oracle: normal form of y^m x^n by repeated application of yx = q xy + alpha x + beta y + gamma.
NcPoly commute_rewrite(const Algebra& alg, unsigned m, unsigned n);
/// Throws NoClosedFormula for the four rows without a formula.
NcPoly commute_formula(const Algebra& alg, unsigned m, unsigned n);
/// Throws NoRecurrence unless the row is (1,alpha,0,0), (1,0,beta,0) or (1,0,0,gamma).
NcPoly commute_recurrence(const Algebra& alg, unsigned m, unsigned n);
NcPoly commute_pullback(const Algebra& alg, unsigned m, unsigned n);

/// f * x for f with y-degree at most one, by a single use of the relation.
NcPoly times_x_low(const NcPoly& f);

NcPoly commute(const Algebra& alg, unsigned m, unsigned n, Engine engine = Engine::Auto);

/// Product with a per-call memo of the y^m x^n products.
NcPoly mul(const NcPoly& f, const NcPoly& g, Engine engine = Engine::Auto);
NcPoly pow(const NcPoly& f, unsigned n, Engine engine = Engine::Auto);
inline NcPoly operator*(const NcPoly& f, const NcPoly& g) { return mul(f, g); }

/// Number of terms of y^i x in the algebra (2(i+1) for the fully generic algebra).
std::size_t term_count(const Algebra& alg, unsigned i);

}  // namespace ncaffine
