#pragma once

// Polynomials in the PBW normal form sum c_{a,b} x^a y^b.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ncaffine/algebra.hpp"

namespace ncaffine {

/// Exponents of the standard monomial x^a y^b.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;
  [[nodiscard]] unsigned degree() const { return a + b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Total degree descending, then x-degree descending.
struct NormalOrder {
  bool operator()(const Monomial& l, const Monomial& r) const {
    if (l.degree() != r.degree()) return l.degree() > r.degree();
    return l.a > r.a;
  }
};

inline constexpr unsigned kMaxDegree = 1u << 20;

class NcPoly {
 public:
  using TermMap = std::map<Monomial, FieldElem, NormalOrder>;

  explicit NcPoly(Algebra alg) : alg_(std::move(alg)) {}

  static NcPoly constant(const Algebra& alg, const FieldElem& c);
  static NcPoly monomial(const Algebra& alg, unsigned a, unsigned b, const FieldElem& c);
  static NcPoly monomial(const Algebra& alg, unsigned a, unsigned b);
  /// Takes ownership of a term map; zero coefficients are dropped.
  static NcPoly from_terms(const Algebra& alg, TermMap terms);
  static NcPoly x(const Algebra& alg) { return monomial(alg, 1, 0); }
  static NcPoly y(const Algebra& alg) { return monomial(alg, 0, 1); }

  [[nodiscard]] const Algebra& algebra() const { return alg_; }
  [[nodiscard]] const AlgebraParams& params() const { return *alg_; }
  [[nodiscard]] const FieldMode& mode() const { return alg_->mode; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] FieldElem coeff(unsigned a, unsigned b) const;
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const;

  /// Adds c x^a y^b in place.
  void add_term(unsigned a, unsigned b, const FieldElem& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly f, const NcPoly& g) { return f += g; }
  friend NcPoly operator-(NcPoly f, const NcPoly& g) { return f -= g; }
  friend NcPoly operator-(const NcPoly& f);
  friend bool operator==(const NcPoly& f, const NcPoly& g);

  /// x^a * this * y^d (no commutation needed).
  [[nodiscard]] NcPoly shifted(unsigned a, unsigned d) const;
  /// Coefficient-wise image, e.g. specialization of parameters. The callback maps every
  /// coefficient into the field of `target`.
  [[nodiscard]] NcPoly map_coefficients(const Algebra& target,
                                        const std::function<FieldElem(const FieldElem&)>& fn) const;

  /// Canonical human form: "x^2*y + 2*x - 1".
  [[nodiscard]] std::string to_string() const;

 private:
  Algebra alg_;
  TermMap terms_;
};

NcPoly scalar_mul(const FieldElem& c, const NcPoly& f);
NcPoly add(const NcPoly& f, const NcPoly& g);
NcPoly neg(const NcPoly& f);

/// Leading monomial under the normal order; requires f nonzero.
Monomial leading_monomial(const NcPoly& f);

/// Normal form of y^m x^n for a fixed algebra.
using Commuter = std::function<NcPoly(unsigned m, unsigned n)>;

/// Bilinear product: (x^a y^b)(x^c y^d) = x^a (y^b x^c) y^d, with the middle factor from
/// `commute` whenever b > 0 and c > 0.
NcPoly mul_with(const NcPoly& f, const NcPoly& g, const Commuter& commute);

}  // namespace ncaffine
