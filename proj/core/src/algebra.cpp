#include "ncaffine/algebra.hpp"

#include <stdexcept>

namespace ncaffine {

FieldElem AlgebraParams::class_invariant() const {
  return gamma * (FieldElem::one(mode) - q) + alpha * beta;
}

std::string AlgebraParams::to_string() const {
  return "(" + q.to_string() + ", " + alpha.to_string() + ", " + beta.to_string() + ", " + gamma.to_string() +
         ") over " + mode.to_string();
}

Algebra make_algebra(FieldElem q, FieldElem alpha, FieldElem beta, FieldElem gamma) {
  FieldMode mode = q.mode();
  for (const FieldElem* e : {&alpha, &beta, &gamma})
    if (!(e->mode() == mode)) throw MixedFieldModes();
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  return std::make_shared<const AlgebraParams>(
      AlgebraParams{std::move(q), std::move(alpha), std::move(beta), std::move(gamma), mode});
}

Algebra make_algebra(const FieldMode& mode, const BigRat& q, const BigRat& alpha, const BigRat& beta,
                     const BigRat& gamma) {
  return make_algebra(FieldElem::from_rational(mode, q), FieldElem::from_rational(mode, alpha),
                      FieldElem::from_rational(mode, beta), FieldElem::from_rational(mode, gamma));
}

Algebra generic_algebra() {
  return make_algebra(FieldElem::symbol(Symbol::q), FieldElem::symbol(Symbol::alpha),
                      FieldElem::symbol(Symbol::beta), FieldElem::symbol(Symbol::gamma));
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!(a->mode == b->mode)) return false;
  return a->q == b->q && a->alpha == b->alpha && a->beta == b->beta && a->gamma == b->gamma;
}

std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::Commutative: return "Commutative";
    case ModelClass::Weyl: return "Weyl";
    case ModelClass::Shift: return "Shift";
    case ModelClass::QuantumPlane: return "QuantumPlane";
    case ModelClass::QWeyl: return "QWeyl";
  }
  return "?";
}

std::optional<ModelClass> model_class_from_name(std::string_view name) {
  for (ModelClass c : kModelClasses)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

Algebra model_algebra(ModelClass c, const FieldElem& q) {
  const FieldMode mode = q.mode();
  auto z = FieldElem::zero(mode);
  auto o = FieldElem::one(mode);
  switch (c) {
    case ModelClass::Commutative: return make_algebra(o, z, z, z);
    case ModelClass::Weyl: return make_algebra(o, z, z, o);
    case ModelClass::Shift: return make_algebra(o, z, o, z);
    case ModelClass::QuantumPlane: return make_algebra(q, z, z, z);
    case ModelClass::QWeyl: return make_algebra(q, z, z, o);
  }
  throw std::logic_error("unknown model class");
}

Algebra model_algebra(ModelClass c, const FieldMode& mode) {
  const bool quantum = c == ModelClass::QuantumPlane || c == ModelClass::QWeyl;
  if (quantum && mode.kind() != FieldMode::Kind::Param)
    throw std::invalid_argument("quantum model over a concrete field needs an explicit q");
  FieldElem q = quantum ? FieldElem::symbol(Symbol::q) : FieldElem::one(mode);
  return model_algebra(c, q);
}

ModelClass classify(const AlgebraParams& p) {
  if (p.is_lie_type()) {
    if (p.alpha.is_zero() && p.beta.is_zero() && p.gamma.is_zero()) return ModelClass::Commutative;
    if (!p.alpha.is_zero() || !p.beta.is_zero()) return ModelClass::Shift;
    return ModelClass::Weyl;
  }
  return p.class_invariant().is_zero() ? ModelClass::QuantumPlane : ModelClass::QWeyl;
}

std::string AlgebraType::to_string() const {
  std::string s = "(";
  s += lie ? "1" : "q";
  s += alpha ? ",alpha" : ",0";
  s += beta ? ",beta" : ",0";
  s += gamma ? ",gamma)" : ",0)";
  return s;
}

AlgebraType algebra_type(const AlgebraParams& p) {
  return AlgebraType{p.is_lie_type(), !p.alpha.is_zero(), !p.beta.is_zero(), !p.gamma.is_zero()};
}

std::array<AlgebraType, 16> all_algebra_types() {
  // Table order: (0,0,0), (a,0,0), (0,b,0), (a,b,0), (0,0,g), (a,0,g), (0,b,g), (a,b,g).
  std::array<AlgebraType, 16> out{};
  std::size_t i = 0;
  for (bool lie : {true, false}) {
    for (bool g : {false, true})
      for (int ab = 0; ab < 4; ++ab) out[i++] = AlgebraType{lie, (ab & 1) != 0, (ab & 2) != 0, g};
  }
  return out;
}

Algebra symbolic_algebra(const AlgebraType& t) {
  const FieldMode mode = FieldMode::param();
  auto sym_or = [&](bool on, Symbol s) { return on ? FieldElem::symbol(s) : FieldElem::zero(mode); };
  return make_algebra(t.lie ? FieldElem::one(mode) : FieldElem::symbol(Symbol::q), sym_or(t.alpha, Symbol::alpha),
                      sym_or(t.beta, Symbol::beta), sym_or(t.gamma, Symbol::gamma));
}

bool has_closed_formula(const AlgebraType& t) { return !(t.alpha && t.beta); }

bool has_recurrence(const AlgebraType& t) {
  int nonzero = int(t.alpha) + int(t.beta) + int(t.gamma);
  return t.lie && nonzero == 1;
}

Algebra c_shift(const FieldElem& c) {
  if (c.is_zero()) throw std::invalid_argument("shift constant must be nonzero");
  auto mode = c.mode();
  return make_algebra(FieldElem::one(mode), FieldElem::zero(mode), -c, FieldElem::zero(mode));
}

Algebra c_difference(const FieldElem& c1, const FieldElem& c2) {
  if (c1.is_zero() || c2.is_zero()) throw std::invalid_argument("difference constants must be nonzero");
  auto mode = c1.mode();
  return make_algebra(FieldElem::one(mode), FieldElem::zero(mode), c1, c1 / c2);
}

Algebra q_difference(const FieldElem& q) {
  auto mode = q.mode();
  return make_algebra(q, q - FieldElem::one(mode), FieldElem::zero(mode), FieldElem::zero(mode));
}

Algebra cq_differential(unsigned c1, unsigned c2, const FieldElem& q) {
  if (c1 == 0 || c2 == 0) throw std::invalid_argument("exponents must be positive");
  auto mode = q.mode();
  auto one = FieldElem::one(mode);
  FieldElem qc1 = q.pow(c1);
  return make_algebra(qc1, FieldElem::zero(mode), FieldElem::zero(mode), (qc1 - one) / (q.pow(c2) - one));
}

FieldElem RepResidual::evaluate(const FieldElem& at_a, const FieldElem& at_b) const {
  return ab * at_a * at_b + a * at_a + b * at_b + constant;
}

bool RepResidual::variety_empty() const {
  return ab.is_zero() && a.is_zero() && b.is_zero() && !constant.is_zero();
}

std::string RepResidual::to_string() const {
  std::string out;
  auto emit = [&out](const FieldElem& c, const std::string& mono) {
    if (c.is_zero()) return;
    std::string coef = c.is_atomic_text() ? c.to_string() : "(" + c.to_string() + ")";
    if (!out.empty()) out += " + ";
    if (mono.empty()) out += coef;
    else if (c.is_one()) out += mono;
    else out += coef + "*" + mono;
  };
  emit(ab, "a*b");
  emit(a, "a");
  emit(b, "b");
  emit(constant, "");
  return out.empty() ? "0" : out;
}

RepResidual one_dim_reps(const AlgebraParams& p) {
  return RepResidual{FieldElem::one(p.mode) - p.q, -p.alpha, -p.beta, -p.gamma};
}

}  // namespace ncaffine
