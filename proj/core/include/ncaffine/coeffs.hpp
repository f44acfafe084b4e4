#pragma once

// Exact coefficient fields: rationals, the rational function field Q(q, alpha, beta, gamma)
// and prime fields GF(p).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ncaffine/errors.hpp"

namespace ncaffine {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds a canonical rational from numerator and denominator.
BigRat make_rat(long num, long den = 1);
BigRat parse_rat(std::string_view text);
std::string to_string(const BigRat& r);

enum class Symbol : std::uint8_t { q = 0, alpha = 1, beta = 2, gamma = 3 };
inline constexpr std::array<Symbol, 4> kSymbols{Symbol::q, Symbol::alpha, Symbol::beta, Symbol::gamma};
std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// Exponent vector over (q, alpha, beta, gamma), packed 16 bits per symbol with q in the
/// most significant lane, so integer comparison is the lexicographic order.
class ParamMonomial {
 public:
  static constexpr unsigned kMaxExponent = 0x7fff;

  constexpr ParamMonomial() = default;
  static ParamMonomial of(Symbol s, unsigned e);
  static ParamMonomial from_exponents(const std::array<unsigned, 4>& e);

  [[nodiscard]] unsigned exponent(Symbol s) const {
    return static_cast<unsigned>((packed_ >> shift(s)) & 0xffffu);
  }
  [[nodiscard]] std::array<unsigned, 4> exponents() const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] bool is_one() const { return packed_ == 0; }
  [[nodiscard]] bool divides(ParamMonomial other) const;
  [[nodiscard]] std::uint64_t packed() const { return packed_; }

  friend ParamMonomial operator*(ParamMonomial a, ParamMonomial b);
  /// Precondition: divisor.divides(*this).
  friend ParamMonomial operator/(ParamMonomial a, ParamMonomial b);
  friend auto operator<=>(ParamMonomial, ParamMonomial) = default;

 private:
  static constexpr unsigned shift(Symbol s) { return 48u - 16u * static_cast<unsigned>(s); }
  std::uint64_t packed_ = 0;
};

/// Polynomial in q, alpha, beta, gamma with rational coefficients. Terms are kept sorted in
/// descending lexicographic order with no zero coefficients.
class ParamPoly {
 public:
  using Term = std::pair<ParamMonomial, BigRat>;

  ParamPoly() = default;
  ParamPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
  static ParamPoly symbol(Symbol s);
  static ParamPoly monomial(ParamMonomial m, const BigRat& c);
  static ParamPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant coefficient (zero if absent).
  [[nodiscard]] BigRat constant_term() const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Term& leading_term() const { return terms_.front(); }
  [[nodiscard]] bool uses(Symbol s) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const BigRat& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(ParamPoly a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  [[nodiscard]] ParamPoly pow(unsigned e) const;
  /// Exact quotient this / d, or nullopt if d does not divide this.
  [[nodiscard]] std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;
  /// Largest monomial dividing every term.
  [[nodiscard]] ParamMonomial monomial_content() const;
  /// Positive rational c such that this / c has coprime integer coefficients.
  [[nodiscard]] BigRat rational_content() const;
  [[nodiscard]] ParamPoly substitute(const std::map<Symbol, BigRat>& values) const;
  /// Full evaluation; throws MissingSymbol if a used symbol is unassigned.
  [[nodiscard]] BigRat evaluate(const std::map<Symbol, BigRat>& values) const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Element of Q(q, alpha, beta, gamma). The denominator is held as a product of normalized
/// factors (primitive, positive leading coefficient, no monomial content, or a single symbol),
/// which keeps common denominators cheap without multivariate gcd.
class ParamRat {
 public:
  struct Factor {
    ParamPoly poly;
    unsigned exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  ParamRat() = default;
  ParamRat(ParamPoly num);  // NOLINT(google-explicit-constructor)
  ParamRat(const BigRat& c) : ParamRat(ParamPoly(c)) {}  // NOLINT(google-explicit-constructor)
  ParamRat(long c) : ParamRat(ParamPoly(c)) {}  // NOLINT(google-explicit-constructor)
  static ParamRat symbol(Symbol s) { return ParamRat(ParamPoly::symbol(s)); }
  /// num / den; throws DivisionByZero when den is zero.
  static ParamRat fraction(const ParamPoly& num, const ParamPoly& den);

  [[nodiscard]] const ParamPoly& num() const { return num_; }
  [[nodiscard]] ParamPoly den() const;
  [[nodiscard]] const std::vector<Factor>& den_factors() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.empty(); }
  [[nodiscard]] bool is_constant() const { return den_.empty() && num_.is_constant(); }
  [[nodiscard]] bool uses(Symbol s) const;

  ParamRat& operator+=(const ParamRat& o);
  ParamRat& operator-=(const ParamRat& o);
  ParamRat& operator*=(const ParamRat& o);
  ParamRat& operator/=(const ParamRat& o);
  friend ParamRat operator+(ParamRat a, const ParamRat& b) { return a += b; }
  friend ParamRat operator-(ParamRat a, const ParamRat& b) { return a -= b; }
  friend ParamRat operator*(ParamRat a, const ParamRat& b) { return a *= b; }
  friend ParamRat operator/(ParamRat a, const ParamRat& b) { return a /= b; }
  friend ParamRat operator-(ParamRat a);
  /// Equality by cross-multiplication.
  friend bool operator==(const ParamRat& a, const ParamRat& b);

  [[nodiscard]] ParamRat inverse() const;
  [[nodiscard]] ParamRat pow(unsigned e) const;
  /// Partial substitution of rational values; throws DenominatorVanishes.
  [[nodiscard]] ParamRat substitute(const std::map<Symbol, BigRat>& values) const;

  [[nodiscard]] std::string to_string() const;

 private:
  void reduce();
  ParamPoly num_;
  std::vector<Factor> den_;
};

/// Removes monomial and integer content shared by numerator and denominator.
ParamRat simplify(const ParamRat& x);

struct ModP {
  std::uint64_t value = 0;
  std::uint64_t p = 2;
  friend bool operator==(const ModP&, const ModP&) = default;
};

class FieldMode {
 public:
  enum class Kind : std::uint8_t { Rational, Param, Prime };

  static FieldMode rational() { return FieldMode(Kind::Rational, 0); }
  static FieldMode param() { return FieldMode(Kind::Param, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static FieldMode prime(std::uint64_t p);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::uint64_t characteristic() const { return p_; }
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const FieldMode&, const FieldMode&) = default;

 private:
  FieldMode(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Tagged union over the three coefficient fields. Values of different modes never mix.
class FieldElem {
 public:
  FieldElem() : v_(BigRat(0)) {}
  FieldElem(BigRat r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(ParamRat r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(ModP r);  // NOLINT(google-explicit-constructor)

  static FieldElem from_int(const FieldMode& mode, long n);
  static FieldElem from_rational(const FieldMode& mode, const BigRat& r);
  static FieldElem zero(const FieldMode& mode) { return from_int(mode, 0); }
  static FieldElem one(const FieldMode& mode) { return from_int(mode, 1); }
  /// Symbolic parameter; only valid in Param mode.
  static FieldElem symbol(Symbol s) { return FieldElem(ParamRat::symbol(s)); }

  [[nodiscard]] FieldMode mode() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_rational() const { return std::holds_alternative<BigRat>(v_); }
  [[nodiscard]] bool is_param() const { return std::holds_alternative<ParamRat>(v_); }
  [[nodiscard]] bool is_modp() const { return std::holds_alternative<ModP>(v_); }
  [[nodiscard]] const BigRat& rational() const { return std::get<BigRat>(v_); }
  [[nodiscard]] const ParamRat& param() const { return std::get<ParamRat>(v_); }
  [[nodiscard]] const ModP& modp() const { return std::get<ModP>(v_); }

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend FieldElem operator-(const FieldElem& a);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  [[nodiscard]] FieldElem inverse() const;
  [[nodiscard]] FieldElem pow(unsigned e) const;
  /// Multiplicative order in GF(p); nullopt outside Prime mode or for zero.
  [[nodiscard]] std::optional<std::uint64_t> multiplicative_order() const;

  /// Plain textual form: rationals "p/r", residues as integers, ParamRat per its grammar.
  [[nodiscard]] std::string to_string() const;
  /// True when to_string() is a single signed factor that needs no parentheses in a product.
  [[nodiscard]] bool is_atomic_text() const;
  /// True when the value prints with a leading minus sign that can be pulled out of a sum.
  [[nodiscard]] bool has_leading_minus() const;

 private:
  std::variant<BigRat, ParamRat, ModP> v_;
};

/// Evaluates a ParamRat in the target field (Rational or Prime mode).
/// Throws MissingSymbol or DenominatorVanishes.
FieldElem specialize(const ParamRat& x, const std::map<Symbol, FieldElem>& assignment);

}  // namespace ncaffine
