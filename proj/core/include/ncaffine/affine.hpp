#pragma once

// Affine substitutions between algebras of the family, stored model -> target:
// X -> a x + b y + c, Y -> a' x + b' y + c'.

#include "ncaffine/algebra.hpp"
#include "ncaffine/ncpoly.hpp"

namespace ncaffine {

/// a x + b y + c.
struct LinearForm {
  FieldElem x;
  FieldElem y;
  FieldElem c;
};

/// Throws std::invalid_argument if f has degree above one.
LinearForm linear_form(const NcPoly& f);
NcPoly from_linear_form(const Algebra& alg, const LinearForm& l);

struct AffineMap {
  Algebra source;  // algebra with generators X, Y (usually a model)
  Algebra target;  // algebra with generators x, y
  NcPoly image_x;  // image of X, over target
  NcPoly image_y;  // image of Y, over target

  [[nodiscard]] FieldElem determinant() const;
  [[nodiscard]] std::string to_string() const;
};

AffineMap identity_map(const Algebra& alg);

/// Verified isomorphism from the model of classify(p) onto p.
AffineMap iso_from_model(const Algebra& p);

/// The substitution exactly as printed in the multiplication tables for the zero pattern of p,
/// together with the class those tables assign. Not verified; some rows are wrong as printed.
AffineMap table_map(const Algebra& p);

/// Image of the source relation in the target: phi(Y) phi(X) - q phi(X) phi(Y) - alpha phi(X)
/// - beta phi(Y) - gamma, with the source parameters.
NcPoly relation_residual(const AffineMap& m);
bool verify_isomorphism(const AffineMap& m);

/// Substitutes the generator images into f (a polynomial over m.source) and normalizes in the
/// target.
NcPoly apply_map(const AffineMap& m, const NcPoly& f);

/// f = scale * poly, where poly has denominator-free coefficients (always scale = 1 outside Param mode).
struct ScaledPoly {
  NcPoly poly;
  FieldElem scale;
};
ScaledPoly clear_denominators(const NcPoly& f);
/// apply_map for f given in scaled form; all products are formed before any division.
NcPoly apply_map_scaled(const AffineMap& m, const ScaledPoly& f);

/// Throws SingularLinearPart.
AffineMap invert_affine(const AffineMap& m);

}  // namespace ncaffine
