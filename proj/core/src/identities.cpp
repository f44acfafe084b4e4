#include "ncaffine/identities.hpp"

#include <stdexcept>

#include "ncaffine/qcomb.hpp"

namespace ncaffine {

namespace {

FieldElem integer(const FieldMode& mode, const BigInt& n) { return FieldElem::from_rational(mode, BigRat(n)); }

}  // namespace

NcPoly bracket_pow(const NcPoly& u, const NcPoly& v, unsigned n, bool q_binomials) {
  const Algebra& alg = u.algebra();
  const FieldElem& q = alg->q;
  std::vector<NcPoly> pu{NcPoly::constant(alg, FieldElem::one(alg->mode))};
  std::vector<NcPoly> pv = pu;
  for (unsigned i = 1; i <= n; ++i) {
    pu.push_back(mul(pu.back(), u));
    pv.push_back(mul(pv.back(), v));
  }
  NcPoly r(alg);
  for (unsigned i = 0; i <= n; ++i) {
    FieldElem c = q_binomials ? q_binomial(n, i, q) : integer(alg->mode, binomial(n, i));
    r += scalar_mul(c, mul(pu[i], pv[n - i]));
  }
  return r;
}

NcPoly weyl_binomial_defect(unsigned n, const FieldMode& mode) {
  const Algebra weyl = model_algebra(ModelClass::Weyl, mode);
  NcPoly r(weyl);
  for (unsigned k = 0; k + 2 <= n; ++k)
    for (unsigned j = 0; j + k + 2 <= n; ++j)
      r.add_term(k, j, integer(mode, binomial(n, j) * binomial(n - j, k) * double_fact_even(n - j - k)));
  return r;
}

NcPoly weyl_binomial_defect_factorial(unsigned n, const FieldMode& mode) {
  const Algebra weyl = model_algebra(ModelClass::Weyl, mode);
  const FieldElem half = FieldElem::from_int(mode, 2).inverse();
  NcPoly r(weyl);
  for (unsigned k = 0; k + 2 <= n; ++k)
    for (unsigned j = 0; j + k + 2 <= n; ++j) {
      unsigned rest = n - j - k;
      if (rest % 2 != 0) continue;
      BigInt den = factorial(j) * factorial(k) * factorial(rest / 2);
      BigRat ratio(factorial(n), den);
      ratio.canonicalize();
      FieldElem c = FieldElem::from_rational(mode, ratio);
      r.add_term(k, j, c * half.pow(rest / 2));
    }
  return r;
}

NcPoly shift_binomial(unsigned n, const FieldMode& mode) {
  const Algebra shift = model_algebra(ModelClass::Shift, mode);
  NcPoly r(shift);
  for (unsigned i = 0; i <= n; ++i) r.add_term(i, n - i, integer(mode, binomial(n, i)));
  for (unsigned k = 0; k < n; ++k)
    for (unsigned j = 0; j + k < n; ++j) r.add_term(k, j, integer(mode, binomial(n, k) * stirling2(n - k, j)));
  return r;
}

std::size_t misordering_index(std::string_view w) {
  std::size_t bs = 0, index = 0;
  for (char c : w) {
    if (c == 'b') {
      ++bs;
    } else if (c == 'a') {
      index += bs;
    } else {
      throw std::invalid_argument(std::string("letter outside {a,b}: ") + c);
    }
  }
  return index;
}

Convergence converge(std::string_view w) {
  Convergence c;
  c.index = misordering_index(w);
  for (char l : w) (l == 'a' ? c.a : c.b) += 1;
  return c;
}

}  // namespace ncaffine
