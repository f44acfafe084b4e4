#include "ncaffine/affine.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncaffine/cache.hpp"

namespace ncaffine {

LinearForm linear_form(const NcPoly& f) {
  if (f.degree() > 1) throw std::invalid_argument("not an affine polynomial: " + f.to_string());
  return LinearForm{f.coeff(1, 0), f.coeff(0, 1), f.coeff(0, 0)};
}

NcPoly from_linear_form(const Algebra& alg, const LinearForm& l) {
  NcPoly r(alg);
  r.add_term(1, 0, l.x);
  r.add_term(0, 1, l.y);
  r.add_term(0, 0, l.c);
  return r;
}

FieldElem AffineMap::determinant() const {
  LinearForm lx = linear_form(image_x), ly = linear_form(image_y);
  return lx.x * ly.y - lx.y * ly.x;
}

std::string AffineMap::to_string() const {
  return "X -> " + image_x.to_string() + ", Y -> " + image_y.to_string();
}

AffineMap identity_map(const Algebra& alg) { return AffineMap{alg, alg, NcPoly::x(alg), NcPoly::y(alg)}; }

namespace {

struct Affine {
  const Algebra& alg;
  // s x + t y + c
  NcPoly operator()(const FieldElem& s, const FieldElem& t, const FieldElem& c) const {
    return from_linear_form(alg, LinearForm{s, t, c});
  }
};

FieldElem require_nonzero(const FieldElem& v) {
  if (v.is_zero()) throw DenominatorVanishes();
  return v;
}

}  // namespace

AffineMap iso_from_model(const Algebra& p) {
  const AlgebraParams& a = *p;
  const FieldMode& mode = a.mode;
  const FieldElem zero = FieldElem::zero(mode), one = FieldElem::one(mode);
  const Affine lin{p};
  const ModelClass cls = classify(a);
  const Algebra model = model_algebra(cls, a.q);
  if (a.is_lie_type()) {
    switch (cls) {
      case ModelClass::Commutative:
        return AffineMap{model, p, NcPoly::x(p), NcPoly::y(p)};
      case ModelClass::Weyl:
        return AffineMap{model, p, NcPoly::x(p), lin(zero, a.gamma.inverse(), zero)};
      default:
        break;
    }
    if (!a.alpha.is_zero()) {
      NcPoly img_x = lin(zero, -a.alpha.inverse(), zero);
      NcPoly img_y = (a.beta.is_zero() && a.gamma.is_zero()) ? NcPoly::x(p) : lin(a.alpha, a.beta, a.gamma);
      return AffineMap{model, p, img_x, img_y};
    }
    return AffineMap{model, p, lin(a.beta.inverse(), zero, zero), lin(zero, a.beta, a.gamma)};
  }
  const FieldElem one_minus_q = one - a.q;
  const FieldElem shift_x = -a.beta / one_minus_q;
  const FieldElem shift_y = -a.alpha / one_minus_q;
  if (cls == ModelClass::QuantumPlane) return AffineMap{model, p, lin(one, zero, shift_x), lin(zero, one, shift_y)};
  if (a.beta.is_zero() && !a.alpha.is_zero())
    return AffineMap{model, p, lin(a.gamma.inverse(), zero, zero), lin(zero, one, shift_y)};
  const FieldElem inv = require_nonzero(a.class_invariant()).inverse();
  return AffineMap{model, p, lin(one, zero, shift_x), lin(zero, one_minus_q * inv, -a.alpha * inv)};
}

AffineMap table_map(const Algebra& p) {
  const AlgebraParams& a = *p;
  const FieldMode& mode = a.mode;
  const FieldElem zero = FieldElem::zero(mode), one = FieldElem::one(mode);
  const Affine lin{p};
  const AlgebraType t = algebra_type(a);
  if (t.lie) {
    if (!t.alpha && !t.beta) {
      if (!t.gamma) return AffineMap{model_algebra(ModelClass::Commutative, mode), p, NcPoly::x(p), NcPoly::y(p)};
      return AffineMap{model_algebra(ModelClass::Weyl, mode), p, NcPoly::x(p), lin(zero, a.gamma.inverse(), zero)};
    }
    const Algebra shift = model_algebra(ModelClass::Shift, mode);
    if (t.alpha) {
      NcPoly img_y = (!t.beta && !t.gamma) ? NcPoly::x(p) : lin(a.alpha, a.beta, a.gamma);
      return AffineMap{shift, p, lin(zero, -a.alpha.inverse(), zero), img_y};
    }
    if (!t.gamma) return AffineMap{shift, p, lin(a.beta.inverse(), zero, zero), NcPoly::y(p)};
    return AffineMap{shift, p, lin(a.beta.inverse(), zero, zero), lin(zero, a.beta, a.gamma)};
  }
  const FieldElem one_minus_q = one - a.q;
  const FieldElem shift_x = -a.beta / one_minus_q;
  const FieldElem shift_y = -a.alpha / one_minus_q;
  if (!t.gamma) {
    const Algebra plane = model_algebra(ModelClass::QuantumPlane, a.q);
    return AffineMap{plane, p, lin(one, zero, shift_x), lin(zero, one, shift_y)};
  }
  const Algebra qweyl = model_algebra(ModelClass::QWeyl, a.q);
  if (!t.alpha && !t.beta) return AffineMap{qweyl, p, NcPoly::x(p), lin(zero, a.gamma.inverse(), zero)};
  if (!t.beta) return AffineMap{qweyl, p, lin(a.gamma.inverse(), zero, zero), lin(zero, one, shift_y)};
  if (!t.alpha) return AffineMap{qweyl, p, lin(one, zero, shift_x), lin(zero, a.gamma.inverse(), zero)};
  const FieldElem inv = require_nonzero(a.class_invariant()).inverse();
  return AffineMap{qweyl, p, lin(one, zero, shift_x), lin(zero, one_minus_q * inv, -a.alpha * inv)};
}

NcPoly relation_residual(const AffineMap& m) {
  const AlgebraParams& s = *m.source;
  const NcPoly& fx = m.image_x;
  const NcPoly& fy = m.image_y;
  NcPoly r = mul(fy, fx, Engine::Rewrite);
  r -= scalar_mul(s.q, mul(fx, fy, Engine::Rewrite));
  r -= scalar_mul(s.alpha, fx);
  r -= scalar_mul(s.beta, fy);
  r -= NcPoly::constant(m.target, s.gamma);
  return r;
}

bool verify_isomorphism(const AffineMap& m) {
  if (!(m.source->mode == m.target->mode)) return false;
  if (m.image_x.degree() > 1 || m.image_y.degree() > 1) return false;
  return !m.determinant().is_zero() && relation_residual(m).is_zero();
}

ScaledPoly clear_denominators(const NcPoly& f) {
  const FieldMode& mode = f.mode();
  if (mode.kind() != FieldMode::Kind::Param) return {f, FieldElem::one(mode)};
  std::vector<ParamRat::Factor> common;
  for (const auto& [mono, c] : f.terms())
    for (const auto& fac : c.param().den_factors()) {
      auto it = std::find_if(common.begin(), common.end(), [&](const auto& x) { return x.poly == fac.poly; });
      if (it == common.end())
        common.push_back(fac);
      else
        it->exp = std::max(it->exp, fac.exp);
    }
  if (common.empty()) return {f, FieldElem::one(mode)};
  NcPoly::TermMap terms;
  for (const auto& [mono, c] : f.terms()) {
    const auto& mine = c.param().den_factors();
    ParamPoly num = c.param().num();
    for (const auto& fac : common) {
      auto it = std::find_if(mine.begin(), mine.end(), [&](const auto& x) { return x.poly == fac.poly; });
      unsigned have = it == mine.end() ? 0 : it->exp;
      if (fac.exp > have) num *= fac.poly.pow(fac.exp - have);
    }
    terms.emplace(mono, FieldElem(ParamRat(std::move(num))));
  }
  FieldElem scale = FieldElem::one(mode);
  for (const auto& fac : common) scale *= FieldElem(ParamRat::fraction(ParamPoly(1L), fac.poly)).pow(fac.exp);
  return {NcPoly::from_terms(f.algebra(), std::move(terms)), scale};
}

NcPoly apply_map_scaled(const AffineMap& m, const ScaledPoly& f) {
  NcPoly r(m.target);
  if (f.poly.is_zero()) return r;
  unsigned max_a = 0, max_b = 0;
  for (const auto& [mono, c] : f.poly.terms()) {
    max_a = std::max(max_a, mono.a);
    max_b = std::max(max_b, mono.b);
  }
  // image_x = sx * PX with PX free of denominators; likewise for y.
  const ScaledPoly ix = clear_denominators(m.image_x);
  const ScaledPoly iy = clear_denominators(m.image_y);
  const FieldElem ex = ix.scale.inverse(), ey = iy.scale.inverse();
  CommuteCache cache(m.target, Strategy::CacheOnly);
  const NcPoly one = NcPoly::constant(m.target, FieldElem::one(m.target->mode));
  std::vector<NcPoly> px{one}, py{one};
  for (unsigned i = 1; i <= max_a; ++i) px.push_back(mul(px.back(), ix.poly, cache));
  for (unsigned i = 1; i <= max_b; ++i) py.push_back(mul(py.back(), iy.poly, cache));
  // sum c x'^a y'^b = sx^A sy^B sum c ex^(A-a) ey^(B-b) PX^a PY^b
  for (const auto& [mono, c] : f.poly.terms())
    r += scalar_mul(c * ex.pow(max_a - mono.a) * ey.pow(max_b - mono.b), mul(px[mono.a], py[mono.b], cache));
  return scalar_mul(f.scale * ix.scale.pow(max_a) * iy.scale.pow(max_b), r);
}

NcPoly apply_map(const AffineMap& m, const NcPoly& f) { return apply_map_scaled(m, clear_denominators(f)); }

AffineMap invert_affine(const AffineMap& m) {
  const LinearForm lx = linear_form(m.image_x), ly = linear_form(m.image_y);
  const FieldElem det = lx.x * ly.y - lx.y * ly.x;
  if (det.is_zero()) throw SingularLinearPart();
  const FieldElem inv = det.inverse();
  // x = (b2 (X - c1) - b1 (Y - c2)) / det, y = (-a2 (X - c1) + a1 (Y - c2)) / det
  const Affine lin{m.source};
  NcPoly img_x = lin(ly.y * inv, -lx.y * inv, (-ly.y * lx.c + lx.y * ly.c) * inv);
  NcPoly img_y = lin(-ly.x * inv, lx.x * inv, (ly.x * lx.c - lx.x * ly.c) * inv);
  return AffineMap{m.target, m.source, img_x, img_y};
}

}  // namespace ncaffine
