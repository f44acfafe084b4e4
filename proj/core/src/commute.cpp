#include "ncaffine/commute.hpp"

#include <map>

#include "ncaffine/affine.hpp"
#include "ncaffine/qcomb.hpp"

namespace ncaffine {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Rewrite: return "rewrite";
    case Engine::Formula: return "formula";
    case Engine::Recurrence: return "recurrence";
    case Engine::Pullback: return "pullback";
  }
  return "?";
}

std::optional<Engine> engine_from_name(std::string_view name) {
  for (Engine e : {Engine::Auto, Engine::Rewrite, Engine::Formula, Engine::Recurrence, Engine::Pullback})
    if (to_string(e) == name) return e;
  return std::nullopt;
}

namespace {

FieldElem integer(const FieldMode& mode, const BigInt& n) { return FieldElem::from_rational(mode, BigRat(n)); }
FieldElem integer(const FieldMode& mode, long n) { return FieldElem::from_int(mode, n); }

// (s x + c)^n, commutative in x.
NcPoly x_affine_pow(const Algebra& alg, const FieldElem& s, const FieldElem& c, unsigned n) {
  NcPoly r(alg);
  for (unsigned k = 0; k <= n; ++k)
    r.add_term(k, 0, integer(alg->mode, binomial(n, k)) * s.pow(k) * c.pow(n - k));
  return r;
}

NcPoly y_affine_pow(const Algebra& alg, const FieldElem& s, const FieldElem& c, unsigned n) {
  NcPoly r(alg);
  for (unsigned k = 0; k <= n; ++k)
    r.add_term(0, k, integer(alg->mode, binomial(n, k)) * s.pow(k) * c.pow(n - k));
  return r;
}

// P(x) * Q(y) is already in normal form.
NcPoly x_times_y(const NcPoly& px, const NcPoly& qy) {
  NcPoly r(px.algebra());
  for (const auto& [a, ca] : px.terms())
    for (const auto& [b, cb] : qy.terms()) r.add_term(a.a, b.b, ca * cb);
  return r;
}

NcPoly lie_formula(const Algebra& alg, const AlgebraType& t, unsigned m, unsigned n) {
  const AlgebraParams& p = *alg;
  const FieldMode& mode = p.mode;
  const FieldElem one = FieldElem::one(mode), zero = FieldElem::zero(mode);
  const int pattern = int(t.alpha) | (int(t.beta) << 1) | (int(t.gamma) << 2);
  switch (pattern) {
    case 0:  // y^m x^n = x^n y^m
      return NcPoly::monomial(alg, n, m);
    case 1:  // x^n (y + n alpha)^m
      return y_affine_pow(alg, one, integer(mode, n) * p.alpha, m).shifted(n, 0);
    case 2:  // (x + m beta)^n y^m
      return x_affine_pow(alg, one, integer(mode, m) * p.beta, n).shifted(0, m);
    case 4: {  // sum_k C(m,k) n^(k) gamma^k x^(n-k) y^(m-k)
      NcPoly r(alg);
      for (unsigned k = 0; k <= std::min(m, n); ++k)
        r.add_term(n - k, m - k, integer(mode, binomial(m, k) * falling(n, k)) * p.gamma.pow(k));
      return r;
    }
    case 5: {  // alpha^-n sum_i C(n,i) (-gamma)^(n-i) (alpha x + gamma)^i (y + i alpha)^m
      NcPoly r(alg);
      for (unsigned i = 0; i <= n; ++i) {
        FieldElem c = integer(mode, binomial(n, i)) * (-p.gamma).pow(n - i);
        NcPoly term = x_times_y(x_affine_pow(alg, p.alpha, p.gamma, i),
                                y_affine_pow(alg, one, integer(mode, i) * p.alpha, m));
        r += scalar_mul(c, term);
      }
      return scalar_mul(p.alpha.pow(n).inverse(), r);
    }
    case 6: {  // beta^-m sum_i C(m,i) (-gamma)^(m-i) (x + i beta)^n (beta y + gamma)^i
      NcPoly r(alg);
      for (unsigned i = 0; i <= m; ++i) {
        FieldElem c = integer(mode, binomial(m, i)) * (-p.gamma).pow(m - i);
        NcPoly term = x_times_y(x_affine_pow(alg, one, integer(mode, i) * p.beta, n),
                                y_affine_pow(alg, p.beta, p.gamma, i));
        r += scalar_mul(c, term);
      }
      return scalar_mul(p.beta.pow(m).inverse(), r);
    }
    default:
      throw NoClosedFormula();
  }
}

// c_{j,k,m,n} = sum_i (-1)^i C(m, i+j+k) C(i+j, j) [i+j+k]^(k) q^((i+j)(n-k)).
FieldElem double_sum_coefficient(const FieldElem& q, unsigned j, unsigned k, unsigned m, unsigned n) {
  const FieldMode mode = q.mode();
  FieldElem acc = FieldElem::zero(mode);
  for (unsigned i = 0; i + j + k <= m; ++i) {
    FieldElem t = integer(mode, binomial(m, i + j + k) * binomial(i + j, j)) * q_falling(i + j + k, k, q) *
                  q.pow((i + j) * (n - k));
    if (i % 2 == 1) t = -t;
    acc += t;
  }
  return acc;
}

NcPoly quantum_formula(const Algebra& alg, const AlgebraType& t, unsigned m, unsigned n) {
  const AlgebraParams& p = *alg;
  const FieldMode& mode = p.mode;
  const FieldElem one = FieldElem::one(mode);
  const FieldElem& q = p.q;
  const int pattern = int(t.alpha) | (int(t.beta) << 1) | (int(t.gamma) << 2);
  switch (pattern) {
    case 0:  // q^(mn) x^n y^m
      return NcPoly::monomial(alg, n, m, q.pow(m * n));
    case 1:  // x^n (q^n y + [n] alpha)^m
      return y_affine_pow(alg, q.pow(n), q_number(n, q) * p.alpha, m).shifted(n, 0);
    case 2:  // (q^m x + [m] beta)^n y^m
      return x_affine_pow(alg, q.pow(m), q_number(m, q) * p.beta, n).shifted(0, m);
    case 4: {  // sum_k [m k] [n]^(k) q^((n-k)(m-k)) gamma^k x^(n-k) y^(m-k)
      NcPoly r(alg);
      for (unsigned k = 0; k <= std::min(m, n); ++k)
        r.add_term(n - k, m - k,
                   q_binomial(m, k, q) * q_falling(n, k, q) * q.pow((n - k) * (m - k)) * p.gamma.pow(k));
      return r;
    }
    case 5: {  // (q,alpha,0,gamma): double sum over k <= n, j <= m - k
      NcPoly r(alg);
      const FieldElem shift = p.alpha / (one - q);
      for (unsigned k = 0; k <= std::min(m, n); ++k) {
        FieldElem outer = q_binomial(n, k, q) * p.gamma.pow(k);
        for (unsigned j = 0; j + k <= m; ++j)
          r.add_term(n - k, j, outer * shift.pow(m - j - k) * double_sum_coefficient(q, j, k, m, n));
      }
      return r;
    }
    case 6: {  // (q,0,beta,gamma): mirror image with the roles of m and n exchanged
      NcPoly r(alg);
      const FieldElem shift = p.beta / (one - q);
      for (unsigned k = 0; k <= std::min(m, n); ++k) {
        FieldElem outer = q_binomial(m, k, q) * p.gamma.pow(k);
        for (unsigned j = 0; j + k <= n; ++j)
          r.add_term(j, m - k, outer * shift.pow(n - j - k) * double_sum_coefficient(q, j, k, n, m));
      }
      return r;
    }
    default:
      throw NoClosedFormula();
  }
}

}  // namespace

NcPoly times_x_low(const NcPoly& f) {
  const AlgebraParams& p = f.params();
  NcPoly::TermMap acc;
  auto put = [&acc](unsigned a, unsigned b, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(Monomial{a, b}, c);
    if (!fresh) it->second += c;
  };
  for (const auto& [m, c] : f.terms()) {
    if (m.b == 0) {
      put(m.a + 1, 0, c);
    } else {
      put(m.a + 1, 1, c * p.q);
      put(m.a + 1, 0, c * p.alpha);
      put(m.a, 1, c * p.beta);
      put(m.a, 0, c * p.gamma);
    }
  }
  return NcPoly::from_terms(f.algebra(), std::move(acc));
}

NcPoly commute_rewrite(const Algebra& alg, unsigned m, unsigned n) {
  if (m == 0 || n == 0) return NcPoly::monomial(alg, n, m);
  // y x^k for k = 0..n
  std::vector<NcPoly> y_xk;
  y_xk.reserve(n + 1);
  y_xk.push_back(NcPoly::y(alg));
  for (unsigned k = 1; k <= n; ++k) y_xk.push_back(times_x_low(y_xk.back()));
  NcPoly cur = y_xk[n];
  // y^j x^n = y (y^(j-1) x^n), with y (x^a y^b) = (y x^a) y^b.
  for (unsigned j = 2; j <= m; ++j) {
    NcPoly next(alg);
    for (const auto& [mono, c] : cur.terms()) {
      for (const auto& [t, tc] : y_xk[mono.a].terms()) next.add_term(t.a, t.b + mono.b, c * tc);
    }
    cur = std::move(next);
  }
  return cur;
}

NcPoly commute_formula(const Algebra& alg, unsigned m, unsigned n) {
  const AlgebraType t = algebra_type(*alg);
  if (!has_closed_formula(t)) throw NoClosedFormula();
  if (m == 0 || n == 0) return NcPoly::monomial(alg, n, m);
  return t.lie ? lie_formula(alg, t, m, n) : quantum_formula(alg, t, m, n);
}

NcPoly commute_recurrence(const Algebra& alg, unsigned m, unsigned n) {
  const AlgebraType t = algebra_type(*alg);
  if (!has_recurrence(t)) throw NoRecurrence();
  if (m == 0 || n == 0) return NcPoly::monomial(alg, n, m);
  const AlgebraParams& p = *alg;
  const FieldMode& mode = p.mode;
  NcPoly r(alg);
  FieldElem c = FieldElem::one(mode);
  if (t.alpha) {
    // C_m = 1 on x^n y^m, C_k = (k+1) n alpha / (m-k) C_(k+1) on x^n y^k.
    r.add_term(n, m, c);
    for (unsigned k = m; k-- > 0;) {
      c = c * integer(mode, static_cast<long>((k + 1) * n)) * p.alpha / integer(mode, static_cast<long>(m - k));
      r.add_term(n, k, c);
    }
  } else if (t.beta) {
    r.add_term(n, m, c);
    for (unsigned k = n; k-- > 0;) {
      c = c * integer(mode, static_cast<long>((k + 1) * m)) * p.beta / integer(mode, static_cast<long>(n - k));
      r.add_term(k, m, c);
    }
  } else {
    // C_0 = 1 on x^n y^m, C_k = (m-k+1)(n-k+1) gamma / k C_(k-1) on x^(n-k) y^(m-k).
    r.add_term(n, m, c);
    for (unsigned k = 1; k <= std::min(m, n); ++k) {
      c = c * integer(mode, static_cast<long>((m - k + 1) * (n - k + 1))) * p.gamma /
          integer(mode, static_cast<long>(k));
      r.add_term(n - k, m - k, c);
    }
  }
  return r;
}

NcPoly commute_pullback(const Algebra& alg, unsigned m, unsigned n) {
  if (m == 0 || n == 0) return NcPoly::monomial(alg, n, m);
  const AffineMap to_alg = iso_from_model(alg);
  const AffineMap to_model = invert_affine(to_alg);
  // y^m x^n = phi(psi(y)^m psi(x)^n), the inner product computed in the model.
  const ScaledPoly px = clear_denominators(to_model.image_x);
  const ScaledPoly py = clear_denominators(to_model.image_y);
  NcPoly inner = mul(pow(py.poly, m, Engine::Formula), pow(px.poly, n, Engine::Formula), Engine::Formula);
  return apply_map_scaled(to_alg, ScaledPoly{std::move(inner), py.scale.pow(m) * px.scale.pow(n)});
}

NcPoly commute(const Algebra& alg, unsigned m, unsigned n, Engine engine) {
  switch (engine) {
    case Engine::Rewrite: return commute_rewrite(alg, m, n);
    case Engine::Formula: return commute_formula(alg, m, n);
    case Engine::Recurrence: return commute_recurrence(alg, m, n);
    case Engine::Pullback: return commute_pullback(alg, m, n);
    case Engine::Auto: break;
  }
  if (has_closed_formula(algebra_type(*alg))) return commute_formula(alg, m, n);
  return commute_pullback(alg, m, n);
}

namespace {

Commuter memo_commuter(const Algebra& alg, Engine engine,
                       std::map<std::pair<unsigned, unsigned>, NcPoly>& memo) {
  return [&alg, engine, &memo](unsigned m, unsigned n) {
    auto key = std::make_pair(m, n);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, commute(alg, m, n, engine)).first;
    return it->second;
  };
}

}  // namespace

NcPoly mul(const NcPoly& f, const NcPoly& g, Engine engine) {
  std::map<std::pair<unsigned, unsigned>, NcPoly> memo;
  return mul_with(f, g, memo_commuter(f.algebra(), engine, memo));
}

NcPoly pow(const NcPoly& f, unsigned n, Engine engine) {
  std::map<std::pair<unsigned, unsigned>, NcPoly> memo;
  Commuter c = memo_commuter(f.algebra(), engine, memo);
  NcPoly r = NcPoly::constant(f.algebra(), FieldElem::one(f.mode()));
  for (unsigned i = 0; i < n; ++i) r = mul_with(r, f, c);
  return r;
}

std::size_t term_count(const Algebra& alg, unsigned i) { return commute(alg, i, 1).size(); }

}  // namespace ncaffine
