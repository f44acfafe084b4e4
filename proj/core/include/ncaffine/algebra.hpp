#pragma once

// Algebras A(q, alpha, beta, gamma) = K<x, y | yx = q xy + alpha x + beta y + gamma>
// and their classification into the five model algebras.

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <optional>

#include "ncaffine/coeffs.hpp"

namespace ncaffine {

struct AlgebraParams {
  FieldElem q;
  FieldElem alpha;
  FieldElem beta;
  FieldElem gamma;
  FieldMode mode = FieldMode::rational();

  [[nodiscard]] bool is_lie_type() const { return q.is_one(); }
  /// gamma (1 - q) + alpha beta: vanishes exactly when a translation removes the constant term.
  [[nodiscard]] FieldElem class_invariant() const;
  [[nodiscard]] std::string to_string() const;
};

using Algebra = std::shared_ptr<const AlgebraParams>;

/// Validates that all parameters share one field mode and that q is nonzero.
Algebra make_algebra(FieldElem q, FieldElem alpha, FieldElem beta, FieldElem gamma);
Algebra make_algebra(const FieldMode& mode, const BigRat& q, const BigRat& alpha, const BigRat& beta,
                     const BigRat& gamma);
/// A(q, alpha, beta, gamma) with all four parameters as indeterminates.
Algebra generic_algebra();
bool same_algebra(const Algebra& a, const Algebra& b);

enum class ModelClass { Commutative, Weyl, Shift, QuantumPlane, QWeyl };
inline constexpr std::array<ModelClass, 5> kModelClasses{ModelClass::Commutative, ModelClass::Weyl,
                                                         ModelClass::Shift, ModelClass::QuantumPlane,
                                                         ModelClass::QWeyl};
std::string_view to_string(ModelClass c);
std::optional<ModelClass> model_class_from_name(std::string_view name);

/// The model representative of a class. Lie-type classes ignore q except for its field mode.
Algebra model_algebra(ModelClass c, const FieldElem& q);
Algebra model_algebra(ModelClass c, const FieldMode& mode);

ModelClass classify(const AlgebraParams& p);
inline ModelClass classify(const Algebra& a) { return classify(*a); }

/// Zero pattern of the parameters: one of the sixteen rows of the multiplication tables.
struct AlgebraType {
  bool lie = true;  // q == 1
  bool alpha = false;
  bool beta = false;
  bool gamma = false;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

AlgebraType algebra_type(const AlgebraParams& p);
/// All sixteen rows, Lie type first, in table order.
std::array<AlgebraType, 16> all_algebra_types();
/// The row with symbolic nonzero parameters (and symbolic q for quantum rows).
Algebra symbolic_algebra(const AlgebraType& t);
/// Rows whose product y^m x^n has a closed formula.
bool has_closed_formula(const AlgebraType& t);
/// Rows with a stated coefficient recurrence.
bool has_recurrence(const AlgebraType& t);

// Operator algebras.

/// s_c x = x s_c - c s_c.
Algebra c_shift(const FieldElem& c);
/// Delta x = x Delta + c1 Delta + c1 / c2.
Algebra c_difference(const FieldElem& c1, const FieldElem& c2);
/// yx = q xy + (q - 1) x.
Algebra q_difference(const FieldElem& q = FieldElem::symbol(Symbol::q));
/// Delta x = q^c1 x Delta + (q^c1 - 1) / (q^c2 - 1).
Algebra cq_differential(unsigned c1, unsigned c2, const FieldElem& q = FieldElem::symbol(Symbol::q));

/// Residual (1 - q) ab - alpha a - beta b - gamma of a one-dimensional representation x -> a, y -> b.
struct RepResidual {
  FieldElem ab;
  FieldElem a;
  FieldElem b;
  FieldElem constant;

  [[nodiscard]] FieldElem evaluate(const FieldElem& at_a, const FieldElem& at_b) const;
  /// Nonzero constant: no one-dimensional representations.
  [[nodiscard]] bool variety_empty() const;
  [[nodiscard]] std::string to_string() const;
};

RepResidual one_dim_reps(const AlgebraParams& p);

}  // namespace ncaffine
