#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace ncaffine;

namespace {

const FieldMode kQ = FieldMode::rational();
const FieldMode kParam = FieldMode::param();
FieldElem sym(Symbol s) { return FieldElem::symbol(s); }
FieldElem pint(long v) { return FieldElem::from_int(kParam, v); }

Algebra weyl() { return model_algebra(ModelClass::Weyl, kQ); }
Algebra row(bool lie, bool a, bool b, bool g) { return symbolic_algebra(AlgebraType{lie, a, b, g}); }

NcPoly parse_in(const Algebra& alg, const char* text) { return eval(text, alg, Engine::Rewrite); }

}  // namespace

TEST(NcPoly, AdditiveStructure) {
  Algebra w = weyl();
  NcPoly x = NcPoly::x(w), y = NcPoly::y(w);
  EXPECT_EQ(add(x + y, x - y), scalar_mul(FieldElem::from_int(kQ, 2), x));
  EXPECT_TRUE(scalar_mul(FieldElem::zero(kQ), x + y).is_zero());
  EXPECT_EQ(neg(x) + x, NcPoly(w));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    NcPoly f = random_poly(w, rng, 3), g = random_poly(w, rng, 3), h = random_poly(w, rng, 3);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
  }
  EXPECT_THROW(NcPoly::x(w) + NcPoly::x(model_algebra(ModelClass::Shift, kQ)), AlgebraMismatch);
}

TEST(NcPoly, PrintOrder) {
  Algebra w = weyl();
  NcPoly f = NcPoly::constant(w, FieldElem::from_int(kQ, -1)) + NcPoly::y(w) + NcPoly::monomial(w, 1, 1) +
             NcPoly::monomial(w, 2, 0) + scalar_mul(FieldElem(make_rat(3, 2)), NcPoly::monomial(w, 0, 2));
  EXPECT_EQ(f.to_string(), "x^2 + x*y + 3/2*y^2 + y - 1");
  EXPECT_EQ(NcPoly(w).to_string(), "0");
  EXPECT_EQ(leading_monomial(f), (Monomial{2, 0}));
}

TEST(Commute, RewriteExamples) {
  EXPECT_EQ(commute_rewrite(weyl(), 1, 1).to_string(), "x*y + 1");
  EXPECT_EQ(commute_rewrite(weyl(), 2, 2).to_string(), "x^2*y^2 + 4*x*y + 2");
  Algebra qw = model_algebra(ModelClass::QWeyl, sym(Symbol::q));
  NcPoly expect = scalar_mul(sym(Symbol::q).pow(2), NcPoly::monomial(qw, 1, 2)) +
                  scalar_mul(pint(1) + sym(Symbol::q), NcPoly::y(qw));
  EXPECT_EQ(commute_rewrite(qw, 2, 1), expect);
}

TEST(Commute, RewriteMatchesWordOracle) {
  for (const AlgebraType& t : all_algebra_types()) {
    Algebra alg = symbolic_algebra(t);
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned n = 0; n <= 4; ++n)
        EXPECT_EQ(commute_rewrite(alg, m, n), oracle::word_commute(alg, m, n)) << t.to_string() << " " << m << "," << n;
  }
}

TEST(Commute, FormulaExamples) {
  Algebra a = row(true, true, false, false);
  NcPoly e = NcPoly::monomial(a, 2, 1) + scalar_mul(pint(2) * sym(Symbol::alpha), NcPoly::monomial(a, 2, 0));
  EXPECT_EQ(commute_formula(a, 1, 2), e);
  Algebra b = row(false, true, false, true);
  NcPoly rel = scalar_mul(sym(Symbol::q), NcPoly::monomial(b, 1, 1)) + scalar_mul(sym(Symbol::alpha), NcPoly::x(b)) +
               NcPoly::constant(b, sym(Symbol::gamma));
  EXPECT_EQ(commute_formula(b, 1, 1), rel);
  Algebra c = row(true, false, true, true);
  const FieldElem be = sym(Symbol::beta), ga = sym(Symbol::gamma);
  NcPoly e2 = NcPoly::monomial(c, 1, 2) + scalar_mul(pint(2) * be, NcPoly::monomial(c, 0, 2)) +
              scalar_mul(pint(2) * ga, NcPoly::y(c));
  EXPECT_EQ(commute_formula(c, 2, 1), e2);
}

TEST(Commute, FormulaRejectsUnknownRows) {
  for (const AlgebraType& t : all_algebra_types()) {
    Algebra alg = symbolic_algebra(t);
    if (has_closed_formula(t))
      EXPECT_NO_THROW(commute_formula(alg, 2, 2));
    else
      EXPECT_THROW(commute_formula(alg, 2, 2), NoClosedFormula) << t.to_string();
  }
  EXPECT_FALSE(has_closed_formula(AlgebraType{true, true, true, false}));
  EXPECT_FALSE(has_closed_formula(AlgebraType{false, true, true, true}));
}

TEST(Commute, RecurrenceExamples) {
  EXPECT_EQ(commute_recurrence(weyl(), 2, 2).to_string(), "x^2*y^2 + 4*x*y + 2");
  Algebra a = row(true, true, false, false);
  const FieldElem al = sym(Symbol::alpha);
  NcPoly e = NcPoly::monomial(a, 1, 2) + scalar_mul(pint(2) * al, NcPoly::monomial(a, 1, 1)) +
             scalar_mul(al.pow(2), NcPoly::x(a));
  EXPECT_EQ(commute_recurrence(a, 2, 1), e);
  EXPECT_EQ(commute_recurrence(a, 0, 3), NcPoly::monomial(a, 3, 0));
  EXPECT_EQ(commute_recurrence(a, 3, 0), NcPoly::monomial(a, 0, 3));
  EXPECT_THROW(commute_recurrence(row(true, false, true, true), 1, 1), NoRecurrence);
}

TEST(Commute, PullbackExamples) {
  Algebra a = row(true, true, true, false);
  NcPoly rel = NcPoly::monomial(a, 1, 1) + scalar_mul(sym(Symbol::alpha), NcPoly::x(a)) +
               scalar_mul(sym(Symbol::beta), NcPoly::y(a));
  EXPECT_EQ(commute_pullback(a, 1, 1), rel);
  Algebra g = row(true, true, true, true);
  EXPECT_EQ(commute_pullback(g, 2, 1), oracle::word_commute(g, 2, 1));
  Algebra c = make_algebra(kQ, 2, 1, 1, 1);
  EXPECT_EQ(commute_pullback(c, 2, 2), commute_rewrite(c, 2, 2));
}

TEST(Commute, EnginesAgreeOnEveryRow) {
  for (const AlgebraType& t : all_algebra_types()) {
    Algebra alg = symbolic_algebra(t);
    for (unsigned m = 0; m <= 5; ++m)
      for (unsigned n = 0; n <= 5; ++n) {
        NcPoly ref = commute_rewrite(alg, m, n);
        if (has_closed_formula(t)) {
          EXPECT_EQ(commute_formula(alg, m, n), ref) << t.to_string() << m << n;
        }
        if (has_recurrence(t)) {
          EXPECT_EQ(commute_recurrence(alg, m, n), ref) << t.to_string() << m << n;
        }
        EXPECT_EQ(commute_pullback(alg, m, n), ref) << t.to_string() << m << n;
        EXPECT_EQ(commute(alg, m, n), ref);
      }
  }
}

TEST(Commute, DefiningRelation) {
  for (const AlgebraType& t : all_algebra_types()) {
    Algebra alg = symbolic_algebra(t);
    const AlgebraParams& p = *alg;
    NcPoly rel = scalar_mul(p.q, NcPoly::monomial(alg, 1, 1)) + scalar_mul(p.alpha, NcPoly::x(alg)) +
                 scalar_mul(p.beta, NcPoly::y(alg)) + NcPoly::constant(alg, p.gamma);
    for (Engine e : {Engine::Auto, Engine::Rewrite, Engine::Pullback}) EXPECT_EQ(commute(alg, 1, 1, e), rel);
  }
}

TEST(Commute, LeadingTerm) {
  for (const AlgebraType& t : all_algebra_types()) {
    Algebra alg = symbolic_algebra(t);
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned n = 1; n <= 4; ++n) {
        NcPoly f = commute(alg, m, n);
        EXPECT_EQ(leading_monomial(f), (Monomial{n, m}));
        EXPECT_EQ(f.coeff(n, m), alg->q.pow(m * n));
      }
  }
  EXPECT_EQ(leading_monomial(commute_rewrite(weyl(), 3, 2)), (Monomial{2, 3}));
}

TEST(Commute, SpecializationCoherence) {
  std::mt19937_64 rng(23);
  Algebra gen = generic_algebra();
  std::vector<NcPoly> symbolic;
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n <= 3; ++n) symbolic.push_back(commute(gen, m, n));
  for (int i = 0; i < 50; ++i) {
    BigRat q = i % 2 ? BigRat(1) : oracle::small_rational(rng);
    if (q == 0) q = 5;
    BigRat a = oracle::small_rational(rng), b = oracle::small_rational(rng), g = oracle::small_rational(rng);
    Algebra alg = make_algebra(kQ, q, a, b, g);
    std::map<Symbol, FieldElem> at{{Symbol::q, FieldElem(q)}, {Symbol::alpha, FieldElem(a)},
                                   {Symbol::beta, FieldElem(b)}, {Symbol::gamma, FieldElem(g)}};
    std::size_t k = 0;
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n, ++k)
        EXPECT_EQ(oracle::specialize_poly(symbolic[k], alg, at), commute(alg, m, n)) << alg->to_string() << m << n;
  }
}

TEST(Commute, QuantumToLieDegeneration) {
  Algebra qrow = row(false, false, false, true);
  Algebra lrow = row(true, false, false, true);
  std::map<Symbol, FieldElem> at{{Symbol::q, FieldElem::one(kQ)}, {Symbol::gamma, FieldElem(make_rat(3, 2))}};
  Algebra target = make_algebra(kQ, 1, 0, 0, make_rat(3, 2));
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n)
      EXPECT_EQ(oracle::specialize_poly(commute_formula(qrow, m, n), target, at),
                oracle::specialize_poly(commute_formula(lrow, m, n), target, at));
}

TEST(Commute, PrimeFieldRows) {
  const FieldMode f7 = FieldMode::prime(7);
  for (const AlgebraType& t : all_algebra_types()) {
    auto v = [&](bool on, long x) { return FieldElem::from_int(f7, on ? x : 0); };
    Algebra alg = make_algebra(t.lie ? FieldElem::one(f7) : FieldElem::from_int(f7, 3), v(t.alpha, 2), v(t.beta, 5), v(t.gamma, 4));
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(commute(alg, m, n), oracle::word_commute(alg, m, n)) << t.to_string();
  }
}

TEST(Mul, Examples) {
  Algebra w = weyl();
  NcPoly s = NcPoly::x(w) + NcPoly::y(w);
  EXPECT_EQ(mul(s, s).to_string(), "x^2 + 2*x*y + y^2 + 1");
  NcPoly one = NcPoly::constant(w, FieldElem::one(kQ));
  EXPECT_EQ(mul(s, one), s);
  EXPECT_EQ(mul(one, s), s);
  Algebra sh = model_algebra(ModelClass::Shift, kQ);
  NcPoly xp1 = NcPoly::x(sh) + NcPoly::constant(sh, FieldElem::one(kQ));
  EXPECT_EQ(mul(NcPoly::y(sh), pow(NcPoly::x(sh), 3)), mul(pow(xp1, 3), NcPoly::y(sh)));
  EXPECT_EQ(pow(s, 0), one);
  EXPECT_EQ(pow(NcPoly::x(w), 5), NcPoly::monomial(w, 5, 0));
  EXPECT_THROW(mul(NcPoly::x(w), NcPoly::x(sh)), AlgebraMismatch);
}

TEST(Mul, EnginesGiveSameProducts) {
  std::mt19937_64 rng(31);
  Algebra gen = generic_algebra();
  for (int i = 0; i < 5; ++i) {
    NcPoly f = random_poly(gen, rng, 3), g = random_poly(gen, rng, 3);
    NcPoly ref = oracle::word_product(f, g);
    for (Engine e : {Engine::Auto, Engine::Rewrite, Engine::Pullback}) EXPECT_EQ(mul(f, g, e), ref);
  }
}

TEST(Mul, Associativity) {
  std::mt19937_64 rng(37);
  std::vector<Algebra> algebras;
  for (ModelClass c : kModelClasses) algebras.push_back(model_algebra(c, FieldElem::symbol(Symbol::q)));
  algebras.push_back(generic_algebra());
  for (const Algebra& alg : algebras)
    for (int i = 0; i < 10; ++i) {
      NcPoly f = random_poly(alg, rng, 3), g = random_poly(alg, rng, 3), h = random_poly(alg, rng, 3);
      EXPECT_EQ(mul(mul(f, g), h), mul(f, mul(g, h))) << alg->to_string();
    }
}

TEST(TermCount, GenericAlgebra) {
  Algebra gen = generic_algebra();
  EXPECT_EQ(term_count(gen, 1), 4u);
  EXPECT_EQ(term_count(gen, 5), 12u);
  EXPECT_EQ(term_count(gen, 10), 22u);
  for (unsigned i = 1; i <= 8; ++i) EXPECT_EQ(commute(gen, 1, i).size(), 2 * (i + 1));
}

TEST(Degree, Overflow) {
  Algebra w = weyl();
  EXPECT_THROW(NcPoly::monomial(w, kMaxDegree + 1, 0), DegreeOverflow);
}

TEST(Expr, EvaluatesNonCommutatively) {
  Algebra w = weyl();
  EXPECT_EQ(parse_in(w, "y*x - x*y").to_string(), "1");
}
