#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace ncaffine;

namespace {

const FieldMode kQ = FieldMode::rational();

std::vector<std::string> texts(const std::vector<NcPoly>& basis) {
  std::vector<std::string> out;
  for (const NcPoly& f : basis) out.push_back(f.to_string());
  return out;
}

bool in_span(const std::vector<NcPoly>& basis, const NcPoly& f, unsigned D) {
  // Rank test over the window coefficients.
  std::vector<Monomial> window = window_monomials(D);
  auto row = [&](const NcPoly& p) {
    Vector v;
    for (const Monomial& m : window) v.push_back(p.coeff(m.a, m.b));
    return v;
  };
  Matrix a;
  for (const NcPoly& b : basis) a.push_back(row(b));
  Matrix b = a;
  b.push_back(row(f));
  return rref(a, window.size()).size() == rref(b, window.size()).size();
}

}  // namespace

TEST(Window, Size) {
  for (unsigned D = 0; D <= 6; ++D) EXPECT_EQ(window_monomials(D).size(), (D + 1) * (D + 2) / 2);
  EXPECT_EQ(window_monomials(1).front(), (Monomial{1, 0}));
}

TEST(LinSolve, Nullspace) {
  const FieldMode m = kQ;
  auto v = [&](long x) { return FieldElem::from_int(m, x); };
  Matrix a{{v(1), v(2), v(3)}, {v(2), v(4), v(6)}};
  Matrix ns = nullspace(a, 3, m);
  ASSERT_EQ(ns.size(), 2u);
  for (const Vector& n : ns) EXPECT_TRUE((v(1) * n[0] + v(2) * n[1] + v(3) * n[2]).is_zero());
}

TEST(IsCentral, Examples) {
  const FieldMode f3 = FieldMode::prime(3);
  Algebra w3 = model_algebra(ModelClass::Weyl, f3);
  EXPECT_TRUE(is_central(NcPoly::monomial(w3, 3, 0)));
  EXPECT_TRUE(is_central(NcPoly::monomial(w3, 0, 3)));
  Algebra s3 = model_algebra(ModelClass::Shift, f3);
  EXPECT_TRUE(is_central(NcPoly::monomial(s3, 3, 0) - NcPoly::x(s3)));
  EXPECT_FALSE(is_central(NcPoly::monomial(s3, 3, 0)));
  EXPECT_TRUE(is_central(NcPoly::monomial(s3, 0, 3)));
  Algebra w = model_algebra(ModelClass::Weyl, kQ);
  EXPECT_FALSE(is_central(NcPoly::x(w)));
  EXPECT_TRUE(is_central(NcPoly::constant(w, FieldElem::from_int(kQ, 5))));
}

TEST(Centralizer, Examples) {
  Algebra w = model_algebra(ModelClass::Weyl, kQ);
  EXPECT_EQ(texts(centralizer_basis(NcPoly::x(w), 3)), (std::vector<std::string>{"x^3", "x^2", "x", "1"}));

  const FieldMode f7 = FieldMode::prime(7);
  Algebra qp = model_algebra(ModelClass::QuantumPlane, FieldElem::from_int(f7, 2));
  std::vector<NcPoly> c = centralizer_basis(NcPoly::x(qp), 3);
  // x^a y^b commutes with x iff 2^b = 1 in GF(7), i.e. b in {0, 3}.
  std::vector<std::string> expect;
  for (const Monomial& m : window_monomials(3))
    if (m.b % 3 == 0) expect.push_back(NcPoly::monomial(qp, m.a, m.b).to_string());
  EXPECT_EQ(texts(c), expect);

  NcPoly one = NcPoly::constant(w, FieldElem::one(kQ));
  EXPECT_EQ(centralizer_basis(one, 2).size(), 6u);
}

TEST(Center, CharacteristicZero) {
  const std::vector<std::string> one{"1"};
  EXPECT_EQ(texts(center_basis(model_algebra(ModelClass::Weyl, kQ), 6)), one);
  EXPECT_EQ(texts(center_basis(model_algebra(ModelClass::Shift, kQ), 6)), one);
  EXPECT_EQ(texts(center_basis(model_algebra(ModelClass::QuantumPlane, FieldElem::symbol(Symbol::q)), 6)), one);
  EXPECT_EQ(texts(center_basis(model_algebra(ModelClass::QWeyl, FieldElem::symbol(Symbol::q)), 6)), one);
  EXPECT_EQ(center_basis(model_algebra(ModelClass::Commutative, kQ), 2).size(), 6u);
}

TEST(Center, QuantumPlaneRootOfUnity) {
  const FieldMode f7 = FieldMode::prime(7);
  Algebra qp = model_algebra(ModelClass::QuantumPlane, FieldElem::from_int(f7, 2));
  std::vector<NcPoly> z = center_basis(qp, 6);
  // 2 has order 3 in GF(7): x^a y^b is central iff 3 | a and 3 | b.
  std::vector<std::string> expect;
  for (const Monomial& m : window_monomials(6))
    if (m.a % 3 == 0 && m.b % 3 == 0) expect.push_back(NcPoly::monomial(qp, m.a, m.b).to_string());
  EXPECT_EQ(texts(z), expect);
}

TEST(Center, PositiveCharacteristic) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const FieldMode fp = FieldMode::prime(p);
    const unsigned D = static_cast<unsigned>(2 * p);
    Algebra w = model_algebra(ModelClass::Weyl, fp);
    std::vector<NcPoly> zw = center_basis(w, D);
    NcPoly xp = NcPoly::monomial(w, p, 0), dp = NcPoly::monomial(w, 0, p);
    EXPECT_TRUE(in_span(zw, xp, D));
    EXPECT_TRUE(in_span(zw, dp, D));
    // Monomials x^(ip) d^(jp) with ip + jp <= 2p.
    EXPECT_EQ(zw.size(), 6u) << p;

    Algebra s = model_algebra(ModelClass::Shift, fp);
    std::vector<NcPoly> zs = center_basis(s, D);
    NcPoly u = NcPoly::monomial(s, p, 0) - NcPoly::x(s), v = NcPoly::monomial(s, 0, p);
    EXPECT_TRUE(in_span(zs, u, D));
    EXPECT_TRUE(in_span(zs, v, D));
    EXPECT_TRUE(in_span(zs, mul(u, v), D));
    EXPECT_EQ(zs.size(), 6u) << p;
    for (const NcPoly& f : zs) EXPECT_TRUE(is_central(f));
    for (const NcPoly& f : zw) EXPECT_TRUE(is_central(f));
  }
}

TEST(Grading, Degrees) {
  Algebra alg = model_algebra(ModelClass::Weyl, kQ);
  const AlgebraParams& w = *alg;
  EXPECT_EQ(graded_degree(w, Monomial{2, 5}), 3);
  EXPECT_EQ(graded_degree(w, Monomial{4, 4}), 0);
  EXPECT_THROW(graded_degree(*generic_algebra(), Monomial{1, 1}), GradingUndefined);
  std::vector<Monomial> zero = graded_component(w, 0, 4);
  for (const Monomial& m : zero) EXPECT_EQ(m.a, m.b);
  EXPECT_EQ(zero.size(), 3u);
}

TEST(Grading, CenterElementsAreHomogeneous) {
  for (std::uint64_t p : {3u, 5u}) {
    const FieldMode fp = FieldMode::prime(p);
    for (ModelClass c : {ModelClass::Weyl, ModelClass::QuantumPlane}) {
      Algebra alg = c == ModelClass::QuantumPlane ? model_algebra(c, FieldElem::from_int(fp, 2)) : model_algebra(c, fp);
      for (const NcPoly& f : center_basis(alg, 2 * p)) EXPECT_TRUE(is_homogeneous(f)) << f.to_string();
    }
  }
}
