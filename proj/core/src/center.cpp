#include "ncaffine/center.hpp"

#include <map>

#include "ncaffine/cache.hpp"
#include "ncaffine/linsolve.hpp"

namespace ncaffine {

std::vector<Monomial> window_monomials(unsigned D) {
  std::vector<Monomial> out;
  for (unsigned d = D + 1; d-- > 0;)
    for (unsigned a = d + 1; a-- > 0;) out.push_back(Monomial{a, d - a});
  return out;
}

namespace {

NcPoly bracket(const NcPoly& f, const NcPoly& g, CommuteCache& cache) {
  return mul(f, g, cache) - mul(g, f, cache);
}

std::vector<NcPoly> solve_commutant(const Algebra& alg, const std::vector<NcPoly>& gens, unsigned D) {
  const FieldMode& mode = alg->mode;
  const std::vector<Monomial> basis = window_monomials(D);
  CommuteCache cache(alg, Strategy::CacheOnly);
  // One column per basis monomial, one row per (generator, output monomial).
  std::map<std::pair<std::size_t, Monomial>, std::size_t, bool (*)(const std::pair<std::size_t, Monomial>&,
                                                                   const std::pair<std::size_t, Monomial>&)>
      row_of([](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return NormalOrder{}(l.second, r.second);
      });
  Matrix rows;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const NcPoly mono = NcPoly::monomial(alg, basis[col].a, basis[col].b);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const NcPoly br = bracket(mono, gens[gi], cache);
      for (const auto& [m, c] : br.terms()) {
        auto [it, fresh] = row_of.try_emplace({gi, m}, rows.size());
        if (fresh) rows.emplace_back(basis.size(), FieldElem::zero(mode));
        rows[it->second][col] = c;
      }
    }
  }
  std::vector<NcPoly> out;
  for (const Vector& v : nullspace(std::move(rows), basis.size(), mode)) {
    NcPoly f(alg);
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(basis[i].a, basis[i].b, v[i]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

bool is_central(const NcPoly& f) {
  const Algebra& alg = f.algebra();
  CommuteCache cache(alg, Strategy::CacheOnly);
  return bracket(f, NcPoly::x(alg), cache).is_zero() && bracket(f, NcPoly::y(alg), cache).is_zero();
}

std::vector<NcPoly> centralizer_basis(const NcPoly& g, unsigned D) { return solve_commutant(g.algebra(), {g}, D); }

std::vector<NcPoly> center_basis(const Algebra& alg, unsigned D) {
  return solve_commutant(alg, {NcPoly::x(alg), NcPoly::y(alg)}, D);
}

long graded_degree(const AlgebraParams& p, const Monomial& m) {
  const bool a = !p.alpha.is_zero(), b = !p.beta.is_zero(), g = !p.gamma.is_zero();
  if (!a && !b) return static_cast<long>(m.b) - static_cast<long>(m.a);
  if (!a && !g) return m.b;
  if (!b && !g) return m.a;
  throw GradingUndefined();
}

std::vector<Monomial> graded_component(const AlgebraParams& p, long k, unsigned D) {
  std::vector<Monomial> out;
  for (const Monomial& m : window_monomials(D))
    if (graded_degree(p, m) == k) out.push_back(m);
  return out;
}

bool is_homogeneous(const NcPoly& f) {
  if (f.is_zero()) return true;
  const long d = graded_degree(f.params(), f.terms().begin()->first);
  for (const auto& [m, c] : f.terms())
    if (graded_degree(f.params(), m) != d) return false;
  return true;
}

}  // namespace ncaffine
