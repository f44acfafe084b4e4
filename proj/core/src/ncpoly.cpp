#include "ncaffine/ncpoly.hpp"

namespace ncaffine {

namespace {

void check_degree(unsigned long a, unsigned long b) {
  if (a > kMaxDegree || b > kMaxDegree) throw DegreeOverflow();
}

void require_same(const NcPoly& f, const NcPoly& g) {
  if (!same_algebra(f.algebra(), g.algebra())) throw AlgebraMismatch();
}

void accumulate(NcPoly::TermMap& terms, const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string monomial_text(unsigned a, unsigned b) {
  std::string out;
  if (a > 0) out += a == 1 ? "x" : "x^" + std::to_string(a);
  if (b > 0) {
    if (!out.empty()) out += '*';
    out += b == 1 ? "y" : "y^" + std::to_string(b);
  }
  return out;
}

std::string term_body(const FieldElem& c, const std::string& mono) {
  std::string coef = c.is_atomic_text() ? c.to_string() : "(" + c.to_string() + ")";
  if (mono.empty()) return coef;
  if (c.is_one()) return mono;
  return coef + "*" + mono;
}

}  // namespace

NcPoly NcPoly::constant(const Algebra& alg, const FieldElem& c) { return monomial(alg, 0, 0, c); }

NcPoly NcPoly::monomial(const Algebra& alg, unsigned a, unsigned b, const FieldElem& c) {
  check_degree(a, b);
  NcPoly p(alg);
  if (!(c.mode() == alg->mode)) throw MixedFieldModes();
  if (!c.is_zero()) p.terms_.emplace(Monomial{a, b}, c);
  return p;
}

NcPoly NcPoly::monomial(const Algebra& alg, unsigned a, unsigned b) {
  return monomial(alg, a, b, FieldElem::one(alg->mode));
}

NcPoly NcPoly::from_terms(const Algebra& alg, TermMap terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  NcPoly p(alg);
  p.terms_ = std::move(terms);
  return p;
}

FieldElem NcPoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find(Monomial{a, b});
  return it == terms_.end() ? FieldElem::zero(mode()) : it->second;
}

long NcPoly::degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree()); }

void NcPoly::add_term(unsigned a, unsigned b, const FieldElem& c) {
  check_degree(a, b);
  accumulate(terms_, Monomial{a, b}, c);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

NcPoly operator-(const NcPoly& f) {
  NcPoly r = f;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const NcPoly& f, const NcPoly& g) {
  if (!same_algebra(f.alg_, g.alg_)) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  auto it = g.terms_.begin();
  for (const auto& [m, c] : f.terms_) {
    if (!(it->first == m) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

NcPoly NcPoly::shifted(unsigned a, unsigned d) const {
  NcPoly r(alg_);
  for (const auto& [m, c] : terms_) {
    check_degree(static_cast<unsigned long>(m.a) + a, static_cast<unsigned long>(m.b) + d);
    r.terms_.emplace_hint(r.terms_.end(), Monomial{m.a + a, m.b + d}, c);
  }
  return r;
}

NcPoly NcPoly::map_coefficients(const Algebra& target, const std::function<FieldElem(const FieldElem&)>& fn) const {
  NcPoly r(target);
  for (const auto& [m, c] : terms_) accumulate(r.terms_, m, fn(c));
  return r;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_text(m.a, m.b);
    if (c.has_leading_minus()) {
      out += first ? "-" : " - ";
      out += term_body(-c, mono);
    } else {
      if (!first) out += " + ";
      out += term_body(c, mono);
    }
    first = false;
  }
  return out;
}

NcPoly scalar_mul(const FieldElem& c, const NcPoly& f) {
  NcPoly r(f.algebra());
  if (c.is_zero()) return r;
  for (const auto& [m, v] : f.terms()) r.add_term(m.a, m.b, c * v);
  return r;
}

NcPoly add(const NcPoly& f, const NcPoly& g) { return f + g; }

NcPoly neg(const NcPoly& f) { return -f; }

Monomial leading_monomial(const NcPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  return f.terms().begin()->first;
}

NcPoly mul_with(const NcPoly& f, const NcPoly& g, const Commuter& commute) {
  require_same(f, g);
  NcPoly::TermMap acc;
  for (const auto& [fm, fc] : f.terms()) {
    for (const auto& [gm, gc] : g.terms()) {
      FieldElem c = fc * gc;
      if (fm.b == 0 || gm.a == 0) {
        check_degree(static_cast<unsigned long>(fm.a) + gm.a, static_cast<unsigned long>(fm.b) + gm.b);
        accumulate(acc, Monomial{fm.a + gm.a, fm.b + gm.b}, c);
        continue;
      }
      NcPoly middle = commute(fm.b, gm.a);
      for (const auto& [mm, mc] : middle.terms()) {
        check_degree(static_cast<unsigned long>(fm.a) + mm.a, static_cast<unsigned long>(mm.b) + gm.b);
        accumulate(acc, Monomial{fm.a + mm.a, mm.b + gm.b}, c * mc);
      }
    }
  }
  return NcPoly::from_terms(f.algebra(), std::move(acc));
}

}  // namespace ncaffine
