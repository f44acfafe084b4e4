#include "ncaffine/coeffs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ncaffine {

// ---------------------------------------------------------------------------------------------
// BigRat helpers

BigRat make_rat(long num, long den) {
  if (den == 0) throw DivisionByZero();
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat parse_rat(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den(1);
  try {
    if (slash == std::string::npos) {
      num = BigInt(s);
    } else {
      num = BigInt(s.substr(0, slash));
      den = BigInt(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  if (den == 0) throw DivisionByZero();
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& r) { return r.get_str(); }

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::q: return "q";
    case Symbol::alpha: return "alpha";
    case Symbol::beta: return "beta";
    case Symbol::gamma: return "gamma";
  }
  return "?";
}

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (Symbol s : kSymbols)
    if (symbol_name(s) == name) return s;
  return std::nullopt;
}

// ---------------------------------------------------------------------------------------------
// ParamMonomial

namespace {
constexpr std::uint64_t kGuardBits = 0x8000800080008000ull;
}

ParamMonomial ParamMonomial::of(Symbol s, unsigned e) {
  if (e > kMaxExponent) throw DegreeOverflow();
  ParamMonomial m;
  m.packed_ = static_cast<std::uint64_t>(e) << shift(s);
  return m;
}

ParamMonomial ParamMonomial::from_exponents(const std::array<unsigned, 4>& e) {
  ParamMonomial m;
  for (Symbol s : kSymbols) m = m * of(s, e[static_cast<unsigned>(s)]);
  return m;
}

std::array<unsigned, 4> ParamMonomial::exponents() const {
  return {exponent(Symbol::q), exponent(Symbol::alpha), exponent(Symbol::beta), exponent(Symbol::gamma)};
}

unsigned ParamMonomial::total_degree() const {
  auto e = exponents();
  return e[0] + e[1] + e[2] + e[3];
}

bool ParamMonomial::divides(ParamMonomial other) const {
  for (Symbol s : kSymbols)
    if (exponent(s) > other.exponent(s)) return false;
  return true;
}

ParamMonomial operator*(ParamMonomial a, ParamMonomial b) {
  ParamMonomial r;
  r.packed_ = a.packed_ + b.packed_;
  if (r.packed_ & kGuardBits) throw DegreeOverflow();
  return r;
}

ParamMonomial operator/(ParamMonomial a, ParamMonomial b) {
  assert(b.divides(a));
  ParamMonomial r;
  r.packed_ = a.packed_ - b.packed_;
  return r;
}

// ---------------------------------------------------------------------------------------------
// ParamPoly

namespace {

using Term = ParamPoly::Term;

bool term_greater(const Term& a, const Term& b) { return a.first > b.first; }

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> canonical_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// a + sign*b on sorted term lists.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? BigRat(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigRat c = subtract ? BigRat(a[i].second - b[j].second) : BigRat(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly::ParamPoly(const BigRat& c) {
  if (c != 0) terms_.emplace_back(ParamMonomial(), c);
}

ParamPoly ParamPoly::symbol(Symbol s) { return monomial(ParamMonomial::of(s, 1), BigRat(1)); }

ParamPoly ParamPoly::monomial(ParamMonomial m, const BigRat& c) {
  ParamPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  ParamPoly p;
  p.terms_ = canonical_terms(std::move(terms));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

BigRat ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return BigRat(0);
}

bool ParamPoly::uses(Symbol s) const {
  return std::any_of(terms_.begin(), terms_.end(), [s](const Term& t) { return t.first.exponent(s) > 0; });
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() < b.size()) return b * a;
  if (b.size() == 1) {
    // Multiplying by a single monomial preserves the order.
    const auto& [m, c] = b.terms_.front();
    r.terms_.reserve(a.size());
    for (const auto& [am, ac] : a.terms_) r.terms_.emplace_back(am * m, ac * c);
    return r;
  }
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [bm, bc] : b.terms_)
    for (const auto& [am, ac] : a.terms_) prod.emplace_back(am * bm, ac * bc);
  r.terms_ = canonical_terms(std::move(prod));
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly operator-(ParamPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return ParamPoly();
  const auto& [dm, dc] = d.leading_term();
  if (d.size() == 1) {
    ParamPoly q;
    q.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (!dm.divides(m)) return std::nullopt;
      q.terms_.emplace_back(m / dm, c / dc);
    }
    return q;
  }
  // Cheap rejection: the leading and trailing monomials of a product are products of the
  // leading and trailing monomials of the factors.
  if (!dm.divides(leading_term().first) || !d.terms_.back().first.divides(terms_.back().first))
    return std::nullopt;
  // Remainder kept in an ordered map so each step costs O(|d| log |rem|).
  std::map<ParamMonomial, BigRat, std::greater<>> rem;
  for (const auto& [m, c] : terms_) rem.emplace_hint(rem.end(), m, c);
  std::vector<Term> quot;
  BigRat qc;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!dm.divides(lead->first)) return std::nullopt;
    const ParamMonomial qm = lead->first / dm;
    qc = lead->second / dc;
    rem.erase(lead);
    for (auto it = d.terms_.begin() + 1; it != d.terms_.end(); ++it) {
      const ParamMonomial pm = it->first * qm;
      auto [pos, fresh] = rem.try_emplace(pm);
      if (fresh) {
        pos->second = -(qc * it->second);
      } else {
        pos->second -= qc * it->second;
        if (sgn(pos->second) == 0) rem.erase(pos);
      }
    }
    quot.emplace_back(qm, qc);
  }
  ParamPoly q;
  q.terms_ = std::move(quot);
  return q;
}

ParamMonomial ParamPoly::monomial_content() const {
  if (terms_.empty()) return {};
  std::array<unsigned, 4> mins = terms_.front().first.exponents();
  for (const auto& t : terms_) {
    auto e = t.first.exponents();
    for (int i = 0; i < 4; ++i) mins[i] = std::min(mins[i], e[i]);
  }
  return ParamMonomial::from_exponents(mins);
}

BigRat ParamPoly::rational_content() const {
  if (terms_.empty()) return BigRat(1);
  BigInt g(0), l(1);
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  BigRat c(g, l);
  c.canonicalize();
  return c;
}

ParamPoly ParamPoly::substitute(const std::map<Symbol, BigRat>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    BigRat coef = c;
    std::array<unsigned, 4> e = m.exponents();
    for (const auto& [s, v] : values) {
      unsigned& k = e[static_cast<unsigned>(s)];
      if (k == 0) continue;
      BigRat pw(1);
      mpz_pow_ui(pw.get_num_mpz_t(), v.get_num_mpz_t(), k);
      mpz_pow_ui(pw.get_den_mpz_t(), v.get_den_mpz_t(), k);
      pw.canonicalize();
      coef *= pw;
      k = 0;
    }
    out.emplace_back(ParamMonomial::from_exponents(e), std::move(coef));
  }
  return from_terms(std::move(out));
}

BigRat ParamPoly::evaluate(const std::map<Symbol, BigRat>& values) const {
  for (Symbol s : kSymbols)
    if (uses(s) && !values.count(s)) throw MissingSymbol(std::string(symbol_name(s)));
  return substitute(values).constant_term();
}

namespace {

std::string monomial_text(ParamMonomial m) {
  std::string out;
  for (Symbol s : kSymbols) {
    unsigned e = m.exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += symbol_name(s);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    BigRat a = abs(c);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    first = false;
    std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// ParamRat

namespace {

// Modular screen for exact division: if d divides n over Q then, for d primitive, the images
// modulo a large prime at a fixed point of all but one variable still divide. A nonzero
// univariate remainder therefore proves non-divisibility.
constexpr std::uint64_t kScreenPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::array<std::uint64_t, 4> kScreenPoint{1234567891ULL, 987654321987ULL, 31415926535ULL,
                                                    2718281828459ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kScreenPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

std::optional<std::uint64_t> reduce_mod(const BigRat& c) {
  std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kScreenPrime);
  std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kScreenPrime);
  if (den == 0) return std::nullopt;
  return mulmod(num, powmod(den, kScreenPrime - 2));
}

// Coefficients (by power of variable v) of p with the other symbols set to the screen point.
std::optional<std::vector<std::uint64_t>> univariate_image(const ParamPoly& p, Symbol v) {
  std::vector<std::uint64_t> out;
  for (const auto& [m, c] : p.terms()) {
    auto cm = reduce_mod(c);
    if (!cm) return std::nullopt;
    std::uint64_t val = *cm;
    for (Symbol s : kSymbols)
      if (s != v && m.exponent(s) > 0) val = mulmod(val, powmod(kScreenPoint[static_cast<unsigned>(s)], m.exponent(s)));
    unsigned k = m.exponent(v);
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] = (out[k] + val) % kScreenPrime;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// False only when d certainly does not divide n.
bool may_divide(const ParamPoly& n, const ParamPoly& d) {
  Symbol v = Symbol::q;
  bool found = false;
  for (Symbol s : kSymbols)
    if (d.uses(s)) {
      v = s;
      found = true;
      break;
    }
  if (!found) return true;
  auto dn = univariate_image(d, v);
  auto nn = univariate_image(n, v);
  if (!dn || !nn || dn->size() < 2) return true;
  std::vector<std::uint64_t> r = *nn;
  const std::uint64_t lead_inv = powmod(dn->back(), kScreenPrime - 2);
  const std::size_t dd = dn->size() - 1;
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i] == 0) continue;
    std::uint64_t f = mulmod(r[i], lead_inv);
    for (std::size_t j = 0; j <= dd; ++j)
      r[i - dd + j] = (r[i - dd + j] + kScreenPrime - mulmod(f, (*dn)[j])) % kScreenPrime;
  }
  for (std::size_t i = 0; i < std::min(dd, r.size()); ++i)
    if (r[i] != 0) return false;
  return true;
}

struct DivisorParts {
  BigRat scale;          // p = scale * mono * core
  ParamMonomial mono;
  ParamPoly core;        // primitive integer polynomial, positive leading coefficient
};

DivisorParts split_divisor(const ParamPoly& p) {
  if (p.is_zero()) throw DivisionByZero();
  DivisorParts parts;
  parts.mono = p.monomial_content();
  ParamPoly rest = p;
  if (!parts.mono.is_one()) rest = *p.divide_exact(ParamPoly::monomial(parts.mono, BigRat(1)));
  parts.scale = rest.rational_content();
  if (rest.leading_term().second < 0) parts.scale = -parts.scale;
  rest *= BigRat(1 / parts.scale);
  parts.core = std::move(rest);
  return parts;
}

bool factor_less(const ParamRat::Factor& a, const ParamRat::Factor& b) {
  return std::lexicographical_compare(
      a.poly.terms().begin(), a.poly.terms().end(), b.poly.terms().begin(), b.poly.terms().end(),
      [](const Term& x, const Term& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
      });
}

// Normalized-core division: both primitive with positive leading coefficient, so the exact
// quotient is again primitive with positive leading coefficient.
void insert_factor(std::vector<ParamRat::Factor>& fs, const ParamPoly& g, unsigned e) {
  if (e == 0 || g.is_constant()) return;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].poly == g) {
      fs[i].exp += e;
      return;
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const ParamPoly& a = fs[i].poly;
    if (a.size() == 1 || g.size() == 1) continue;
    if (auto qa = may_divide(a, g) ? a.divide_exact(g) : std::nullopt) {
      unsigned ea = fs[i].exp;
      fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
      insert_factor(fs, g, ea + e);
      insert_factor(fs, *qa, ea);
      return;
    }
    if (auto qg = may_divide(g, a) ? g.divide_exact(a) : std::nullopt) {
      fs[i].exp += e;
      insert_factor(fs, *qg, e);
      return;
    }
  }
  fs.push_back({g, e});
  std::sort(fs.begin(), fs.end(), factor_less);
}

// Adds a divisor polynomial to a factor list; returns the scalar that must divide the numerator.
BigRat absorb_divisor(std::vector<ParamRat::Factor>& fs, const ParamPoly& p) {
  DivisorParts parts = split_divisor(p);
  for (Symbol s : kSymbols) insert_factor(fs, ParamPoly::symbol(s), parts.mono.exponent(s));
  insert_factor(fs, parts.core, 1);
  return parts.scale;
}

ParamPoly product(const std::vector<ParamRat::Factor>& fs) {
  ParamPoly r(1L);
  for (const auto& f : fs) r *= f.poly.pow(f.exp);
  return r;
}

}  // namespace

ParamRat::ParamRat(ParamPoly num) : num_(std::move(num)) {}

ParamRat ParamRat::fraction(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  ParamRat r;
  BigRat scale = absorb_divisor(r.den_, den);
  r.num_ = num;
  r.num_ *= BigRat(1 / scale);
  r.reduce();
  return r;
}

ParamPoly ParamRat::den() const { return product(den_); }

bool ParamRat::uses(Symbol s) const {
  if (num_.uses(s)) return true;
  return std::any_of(den_.begin(), den_.end(), [s](const Factor& f) { return f.poly.uses(s); });
}

void ParamRat::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    if (f.poly.size() == 1) {
      // Single symbol: cancel directly against the numerator's monomial content.
      ParamMonomial fm = f.poly.leading_term().first;
      Symbol s = Symbol::q;
      for (Symbol t : kSymbols)
        if (fm.exponent(t) > 0) s = t;
      unsigned k = std::min(f.exp, num_.monomial_content().exponent(s));
      if (k > 0) {
        num_ = *num_.divide_exact(ParamPoly::monomial(ParamMonomial::of(s, k), BigRat(1)));
        f.exp -= k;
      }
      continue;
    }
    while (f.exp > 0) {
      if (!may_divide(num_, f.poly)) break;
      auto q = num_.divide_exact(f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.exp;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.exp == 0; });
}

ParamRat& ParamRat::operator+=(const ParamRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // Common denominator as the factor-wise maximum.
  std::vector<Factor> common = den_;
  for (const auto& f : o.den_) {
    auto it = std::find_if(common.begin(), common.end(), [&](const Factor& c) { return c.poly == f.poly; });
    if (it == common.end())
      common.push_back(f);
    else
      it->exp = std::max(it->exp, f.exp);
  }
  auto cofactor = [&common](const std::vector<Factor>& mine) {
    ParamPoly m(1L);
    for (const auto& c : common) {
      auto it = std::find_if(mine.begin(), mine.end(), [&](const Factor& f) { return f.poly == c.poly; });
      unsigned have = it == mine.end() ? 0 : it->exp;
      if (c.exp > have) m *= c.poly.pow(c.exp - have);
    }
    return m;
  };
  num_ = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
  std::sort(common.begin(), common.end(), factor_less);
  den_ = std::move(common);
  reduce();
  return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o) { return *this += -o; }

ParamRat operator-(ParamRat a) {
  a.num_ = -a.num_;
  return a;
}

ParamRat& ParamRat::operator*=(const ParamRat& o) {
  if (is_zero() || o.is_zero()) {
    num_ = ParamPoly();
    den_.clear();
    return *this;
  }
  num_ *= o.num_;
  for (const auto& f : o.den_) insert_factor(den_, f.poly, f.exp);
  reduce();
  return *this;
}

ParamRat ParamRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  ParamRat r;
  BigRat scale = absorb_divisor(r.den_, num_);
  r.num_ = den();
  r.num_ *= BigRat(1 / scale);
  r.reduce();
  return r;
}

ParamRat& ParamRat::operator/=(const ParamRat& o) { return *this *= o.inverse(); }

ParamRat ParamRat::pow(unsigned e) const {
  ParamRat r;
  r.num_ = num_.pow(e);
  if (e > 0)
    for (const auto& f : den_) r.den_.push_back({f.poly, f.exp * e});
  if (e == 0) r.num_ = ParamPoly(1L);
  return r;
}

bool operator==(const ParamRat& a, const ParamRat& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den() == b.num_ * a.den();
}

ParamRat ParamRat::substitute(const std::map<Symbol, BigRat>& values) const {
  ParamPoly d = den().substitute(values);
  if (d.is_zero()) throw DenominatorVanishes();
  return fraction(num_.substitute(values), d);
}

std::string ParamRat::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  return n + "/(" + den().to_string() + ")";
}

ParamRat simplify(const ParamRat& x) {
  if (x.is_zero()) return ParamRat();
  ParamPoly num = x.num();
  ParamPoly den = x.den();
  ParamMonomial common = num.monomial_content();
  ParamMonomial dm = den.monomial_content();
  std::array<unsigned, 4> e{};
  for (Symbol s : kSymbols) e[static_cast<unsigned>(s)] = std::min(common.exponent(s), dm.exponent(s));
  ParamPoly mono = ParamPoly::monomial(ParamMonomial::from_exponents(e), BigRat(1));
  num = *num.divide_exact(mono);
  den = *den.divide_exact(mono);
  BigRat c = num.rational_content() / den.rational_content();
  num *= BigRat(1 / num.rational_content());
  den *= BigRat(1 / den.rational_content());
  num *= c;
  if (auto q = num.divide_exact(den)) return ParamRat(*q);
  return ParamRat::fraction(num, den);
}

// ---------------------------------------------------------------------------------------------
// Prime fields

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldMode FieldMode::prime(std::uint64_t p) {
  if (p >= (1ull << 32) || !is_prime(p)) throw std::invalid_argument("characteristic must be a prime below 2^32");
  return FieldMode(Kind::Prime, p);
}

std::string FieldMode::to_string() const {
  switch (kind_) {
    case Kind::Rational: return "QQ";
    case Kind::Param: return "QQ(q,alpha,beta,gamma)";
    case Kind::Prime: return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

std::uint64_t reduce_mod(const BigInt& z, std::uint64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(ModP r) : v_(ModP{r.value % r.p, r.p}) {}

FieldElem FieldElem::from_int(const FieldMode& mode, long n) { return from_rational(mode, BigRat(n)); }

FieldElem FieldElem::from_rational(const FieldMode& mode, const BigRat& r) {
  switch (mode.kind()) {
    case FieldMode::Kind::Rational: return FieldElem(r);
    case FieldMode::Kind::Param: return FieldElem(ParamRat(r));
    case FieldMode::Kind::Prime: {
      std::uint64_t p = mode.characteristic();
      std::uint64_t den = reduce_mod(r.get_den(), p);
      if (den == 0) throw DivisionByZero();
      std::uint64_t num = reduce_mod(r.get_num(), p);
      return FieldElem(ModP{mulmod(num, powmod(den, p - 2, p), p), p});
    }
  }
  return {};
}

FieldMode FieldElem::mode() const {
  if (is_rational()) return FieldMode::rational();
  if (is_param()) return FieldMode::param();
  return FieldMode::prime(modp().p);
}

bool FieldElem::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigRat>) return x == 0;
        else if constexpr (std::is_same_v<T, ParamRat>) return x.is_zero();
        else return x.value == 0;
      },
      v_);
}

bool FieldElem::is_one() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigRat>) return x == 1;
        else if constexpr (std::is_same_v<T, ParamRat>) return x.is_constant() && x.num() == ParamPoly(1L);
        else return x.value == 1;
      },
      v_);
}

namespace {

void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return;
  if (a.is_param() && b.is_param()) return;
  if (a.is_modp() && b.is_modp() && a.modp().p == b.modp().p) return;
  throw MixedFieldModes();
}

}  // namespace

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(*this, o);
  if (is_rational()) std::get<BigRat>(v_) += o.rational();
  else if (is_param()) std::get<ParamRat>(v_) += o.param();
  else {
    auto& m = std::get<ModP>(v_);
    m.value = (m.value + o.modp().value) % m.p;
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(*this, o);
  if (is_rational()) std::get<BigRat>(v_) -= o.rational();
  else if (is_param()) std::get<ParamRat>(v_) -= o.param();
  else {
    auto& m = std::get<ModP>(v_);
    m.value = (m.value + m.p - o.modp().value) % m.p;
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(*this, o);
  if (is_rational()) std::get<BigRat>(v_) *= o.rational();
  else if (is_param()) std::get<ParamRat>(v_) *= o.param();
  else {
    auto& m = std::get<ModP>(v_);
    m.value = mulmod(m.value, o.modp().value, m.p);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(*this, o);
  return *this *= o.inverse();
}

FieldElem operator-(const FieldElem& a) {
  if (a.is_rational()) return FieldElem(BigRat(-a.rational()));
  if (a.is_param()) return FieldElem(-a.param());
  const ModP& m = a.modp();
  return FieldElem(ModP{(m.p - m.value) % m.p, m.p});
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  if (a.is_rational()) return a.rational() == b.rational();
  if (a.is_param()) return a.param() == b.param();
  return a.modp().value == b.modp().value;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElem(BigRat(1 / rational()));
  if (is_param()) return FieldElem(param().inverse());
  const ModP& m = modp();
  return FieldElem(ModP{powmod(m.value, m.p - 2, m.p), m.p});
}

FieldElem FieldElem::pow(unsigned e) const {
  if (is_param()) return FieldElem(param().pow(e));
  if (is_modp()) return FieldElem(ModP{powmod(modp().value, e, modp().p), modp().p});
  FieldElem r = from_int(mode(), 1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

std::optional<std::uint64_t> FieldElem::multiplicative_order() const {
  if (!is_modp() || is_zero()) return std::nullopt;
  const ModP& m = modp();
  std::uint64_t x = m.value;
  for (std::uint64_t k = 1; k < m.p; ++k) {
    if (x == 1) return k;
    x = mulmod(x, m.value, m.p);
  }
  return std::nullopt;
}

std::string FieldElem::to_string() const {
  if (is_rational()) return rational().get_str();
  if (is_param()) return param().to_string();
  return std::to_string(modp().value);
}

bool FieldElem::is_atomic_text() const {
  if (is_rational() || is_modp()) return true;
  const ParamRat& r = param();
  return r.is_polynomial() && r.num().size() <= 1;
}

bool FieldElem::has_leading_minus() const {
  if (is_rational()) return rational() < 0;
  if (is_modp()) return false;
  const ParamRat& r = param();
  return r.is_polynomial() && r.num().size() == 1 && r.num().leading_term().second < 0;
}

FieldElem specialize(const ParamRat& x, const std::map<Symbol, FieldElem>& assignment) {
  if (assignment.empty() && !x.is_constant()) {
    for (Symbol s : kSymbols)
      if (x.uses(s)) throw MissingSymbol(std::string(symbol_name(s)));
  }
  std::optional<FieldMode> mode;
  for (const auto& [s, v] : assignment) {
    if (v.is_param()) throw MixedFieldModes();
    if (mode && !(*mode == v.mode())) throw MixedFieldModes();
    mode = v.mode();
  }
  FieldMode target = mode.value_or(FieldMode::rational());
  auto eval = [&](const ParamPoly& p) {
    FieldElem acc = FieldElem::zero(target);
    for (const auto& [m, c] : p.terms()) {
      FieldElem t = FieldElem::from_rational(target, c);
      for (Symbol s : kSymbols) {
        unsigned e = m.exponent(s);
        if (e == 0) continue;
        auto it = assignment.find(s);
        if (it == assignment.end()) throw MissingSymbol(std::string(symbol_name(s)));
        t *= it->second.pow(e);
      }
      acc += t;
    }
    return acc;
  };
  FieldElem num = eval(x.num());
  FieldElem den = FieldElem::one(target);
  for (const auto& f : x.den_factors()) den *= eval(f.poly).pow(f.exp);
  if (den.is_zero()) throw DenominatorVanishes();
  return num / den;
}

}  // namespace ncaffine
