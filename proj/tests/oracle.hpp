#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include "ncaffine/ncaffine.hpp"

namespace ncaffine {

// Readable gtest failure messages.
inline void PrintTo(const NcPoly& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const FieldElem& c, std::ostream* os) { *os << c.to_string() << " [" << c.mode().to_string() << "]"; }

}  // namespace ncaffine

namespace oracle {

using namespace ncaffine;

// Elements of the free algebra on {x, y}, keyed by word.
using FreeElem = std::map<std::string, FieldElem>;

inline void accumulate(FreeElem& e, const std::string& w, const FieldElem& c) {
  auto [it, fresh] = e.try_emplace(w, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

// Rewrites the leftmost "yx" until every word is x^a y^b.
inline NcPoly word_normal_form(const Algebra& alg, FreeElem e) {
  const AlgebraParams& p = *alg;
  for (;;) {
    FreeElem next;
    bool changed = false;
    for (const auto& [w, c] : e) {
      auto pos = w.find("yx");
      if (pos == std::string::npos) {
        accumulate(next, w, c);
        continue;
      }
      changed = true;
      std::string pre = w.substr(0, pos), post = w.substr(pos + 2);
      accumulate(next, pre + "xy" + post, c * p.q);
      accumulate(next, pre + "x" + post, c * p.alpha);
      accumulate(next, pre + "y" + post, c * p.beta);
      accumulate(next, pre + post, c * p.gamma);
    }
    e = std::move(next);
    if (!changed) break;
  }
  NcPoly r(alg);
  for (const auto& [w, c] : e) {
    auto a = static_cast<unsigned>(std::count(w.begin(), w.end(), 'x'));
    r.add_term(a, static_cast<unsigned>(w.size()) - a, c);
  }
  return r;
}

inline std::string standard_word(unsigned a, unsigned b) { return std::string(a, 'x') + std::string(b, 'y'); }

inline NcPoly word_commute(const Algebra& alg, unsigned m, unsigned n) {
  FreeElem e;
  e.emplace(std::string(m, 'y') + std::string(n, 'x'), FieldElem::one(alg->mode));
  return word_normal_form(alg, e);
}

inline NcPoly word_product(const NcPoly& f, const NcPoly& g) {
  FreeElem e;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms())
      accumulate(e, standard_word(mf.a, mf.b) + standard_word(mg.a, mg.b), cf * cg);
  return word_normal_form(f.algebra(), e);
}

// Misordering index by bubbling adjacent "ba" pairs.
inline std::size_t swap_simulation(std::string w) {
  std::size_t swaps = 0;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == 'b' && w[i + 1] == 'a') {
        std::swap(w[i], w[i + 1]);
        ++swaps;
        again = true;
      }
  }
  return swaps;
}

inline FieldElem q_symbol() { return FieldElem::symbol(Symbol::q); }

// (q^n - 1) / (q - 1) by exact division.
inline FieldElem q_number_quotient(unsigned n, const FieldElem& q) {
  const FieldElem one = FieldElem::one(q.mode());
  return (q.pow(n) - one) / (q - one);
}

inline FieldElem q_binomial_quotient(unsigned n, unsigned k, const FieldElem& q) {
  if (k > n) return FieldElem::zero(q.mode());
  FieldElem num = FieldElem::one(q.mode()), den = FieldElem::one(q.mode());
  for (unsigned i = 1; i <= n; ++i) num *= q_number_quotient(i, q);
  for (unsigned i = 1; i <= k; ++i) den *= q_number_quotient(i, q);
  for (unsigned i = 1; i <= n - k; ++i) den *= q_number_quotient(i, q);
  return num / den;
}

// S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n.
inline BigInt stirling2_explicit(unsigned n, unsigned k) {
  BigInt sum = 0, kf = 1, c = 1;
  for (unsigned i = 2; i <= k; ++i) kf *= i;
  for (unsigned j = 0; j <= k; ++j) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), k - j, n);
    sum += (j % 2 ? -1 : 1) * c * p;
    c = c * (k - j) / (j + 1);
  }
  return sum / kf;
}

// Classification through the variety of one-dimensional representations:
// (1-q)ab - alpha a - beta b - gamma = 0 is a conic (q != 1) or an affine line/plane (q = 1).
inline ModelClass classify_by_reps(const AlgebraParams& p) {
  if (p.q.is_one()) {
    if (p.alpha.is_zero() && p.beta.is_zero()) return p.gamma.is_zero() ? ModelClass::Commutative : ModelClass::Weyl;
    return ModelClass::Shift;
  }
  // Symmetric matrix of the conic in (a, b, 1); the conic splits into two lines iff det = 0.
  const FieldElem half = FieldElem::from_rational(p.mode, make_rat(1, 2));
  const FieldElem zero = FieldElem::zero(p.mode), one = FieldElem::one(p.mode);
  const FieldElem s = (one - p.q) * half;
  const FieldElem m[3][3] = {{zero, s, -p.alpha * half}, {s, zero, -p.beta * half}, {-p.alpha * half, -p.beta * half, -p.gamma}};
  const FieldElem det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det.is_zero() ? ModelClass::QuantumPlane : ModelClass::QWeyl;
}

inline BigRat small_rational(std::mt19937_64& rng, long span = 4) {
  std::uniform_int_distribution<long> num(-span, span), den(1, 3);
  return make_rat(num(rng), den(rng));
}

inline NcPoly specialize_poly(const NcPoly& f, const Algebra& target, const std::map<Symbol, FieldElem>& at) {
  return f.map_coefficients(target, [&](const FieldElem& c) { return specialize(c.param(), at); });
}

}  // namespace oracle
