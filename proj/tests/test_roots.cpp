#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/roots.hpp"

using namespace iwasawa;

namespace {

/// Roots of a split catalog form: h = a, lexicographic ordering on a-values.
ComplexRootDatum split_datum(const CatalogEntry& e, ComplexAlgebra& gC) {
  gC = complexify(e.g);
  std::vector<CVec> cartan;
  for (const auto& v : e.a.basis()) cartan.push_back(complexify(v));
  std::vector<QVec> ordering;
  for (std::size_t i = 0; i < cartan.size(); ++i) ordering.push_back(unit_vec<Rational>(cartan.size(), i));
  return complex_root_decomposition(gC, cartan, cartan.size(), ordering);
}

bool in_span(const CVec& v, const std::vector<CVec>& span) {
  if (is_zero_vec(v)) return true;
  std::vector<CVec> with = span;
  with.push_back(v);
  return rank(CMatrix::from_columns(with, v.size())) == rank(CMatrix::from_columns(span, v.size()));
}

std::vector<std::size_t> multiplicities(const RestrictedRootDatum& d) {
  std::vector<std::size_t> out;
  for (const auto& r : d.roots)
    if (r.positive) out.push_back(r.space.dim());
  std::sort(out.begin(), out.end());
  return out;
}

RestrictedRootDatum restricted_of(const LieAlgebra& s) {
  return restricted_root_decomposition(s, split_torus_of_iwasawa(s).basis());
}

}  // namespace

TEST(RestrictedRoots, Multiplicities) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(multiplicities(restricted_of(iwasawa_of(fixtures::entry("sl(3,R)")))), (V{1, 1, 1}));
  EXPECT_EQ(multiplicities(restricted_of(iwasawa_of(fixtures::entry("su(2,1)")))), (V{1, 2}));
  EXPECT_EQ(multiplicities(restricted_of(iwasawa_of(fixtures::entry("sp(4,R)")))), (V{1, 1, 1, 1}));
  EXPECT_EQ(multiplicities(restricted_of(real_hyperbolic(3))), (V{3}));
}

TEST(RestrictedRoots, Su21IsBC1) {
  auto d = restricted_of(iwasawa_of(fixtures::entry("su(2,1)")));
  ASSERT_EQ(d.torus.size(), 1u);
  std::vector<Rational> values;
  for (const auto& r : d.roots)
    if (r.positive) values.push_back(r.functional[0]);
  ASSERT_EQ(values.size(), 2u);
  std::sort(values.begin(), values.end());
  EXPECT_EQ(values[1], 2 * values[0]);
}

TEST(Properties, RestrictedGrading) {
  for (const auto& l : catalog_labels()) {
    LieAlgebra s = iwasawa_of(fixtures::entry(l));
    auto d = restricted_of(s);
    std::vector<std::pair<QVec, Subspace>> spaces{{QVec(d.torus.size(), Rational(0)), d.centralizer}};
    for (const auto& r : d.roots) spaces.emplace_back(r.functional, r.space);
    for (const auto& [f1, s1] : spaces)
      for (const auto& [f2, s2] : spaces) {
        QVec sum = f1;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += f2[i];
        Subspace target = Subspace::zero(s.dim());
        for (const auto& [f3, s3] : spaces)
          if (f3 == sum) target = s3;
        EXPECT_TRUE(target.contains(bracket_span(s, s1, s2))) << l;
      }
  }
}

TEST(Properties, ComplexGrading) {
  for (const auto* l : {"sl(2,R)", "sl(3,R)", "sp(4,R)"}) {
    ComplexAlgebra gC;
    auto d = split_datum(fixtures::entry(l), gC);
    for (const auto& a : d.roots)
      for (const auto& b : d.roots) {
        CVec sum = a.functional;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.functional[i];
        std::vector<CVec> target;
        if (is_zero_vec(sum)) target = d.cartan;
        for (const auto& c : d.roots)
          if (c.functional == sum) target.push_back(c.vector);
        EXPECT_TRUE(in_span(gC.bracket(a.vector, b.vector), target)) << l;
      }
  }
}

TEST(ComplexRoots, Sl3) {
  ComplexAlgebra gC;
  auto d = split_datum(fixtures::entry("sl(3,R)"), gC);
  EXPECT_TRUE(gC.is_valid());
  EXPECT_EQ(d.roots.size(), 6u);
  EXPECT_EQ(d.simple.size(), 2u);
  std::vector<CVec> simple;
  for (auto i : d.simple) simple.push_back(d.roots[i].functional);
  auto cm = cartan_matrix(simple, complex_trace_form(gC, d.cartan));
  EXPECT_EQ(cm.type, "A2");
  EXPECT_EQ(cm.matrix, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
}

TEST(KillingRelation, Sl2FrozenValues) {
  ComplexAlgebra gC;
  auto d = split_datum(fixtures::entry("sl(2,R)"), gC);
  auto rep = borel_killing_relation_check(gC, d);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.b_g(0, 0), Gaussian(8));
  EXPECT_EQ(rep.b_b(0, 0), Gaussian(4));
}

TEST(KillingRelation, MatchesMatrixTraces) {
  for (const auto* l : {"sl(2,R)", "sl(3,R)", "sp(4,R)"}) {
    const auto& e = fixtures::entry(l);
    ComplexAlgebra gC;
    auto d = split_datum(e, gC);
    auto rep = borel_killing_relation_check(gC, d);
    EXPECT_TRUE(rep.holds) << l;
    std::vector<QVec> all;
    for (std::size_t i = 0; i < e.g.dim(); ++i) all.push_back(unit_vec<Rational>(e.g.dim(), i));
    auto g_mats = fixtures::realize_all(e, all);
    std::vector<QVec> borel = e.a.basis();
    for (const auto& v : e.n.basis()) borel.push_back(v);
    auto b_mats = fixtures::realize_all(e, borel);
    const auto& h = e.a.basis();
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) {
        auto x = fixtures::realize(e, h[i]), y = fixtures::realize(e, h[j]);
        EXPECT_NEAR(oracle::trace_form_on_span(g_mats, x, y).real(), rep.b_g(i, j).re().get_d(), 1e-9) << l;
        EXPECT_NEAR(oracle::trace_form_on_span(b_mats, x, y).real(), rep.b_b(i, j).re().get_d(), 1e-9) << l;
      }
  }
}

TEST(Dynkin, StandardMatricesClassify) {
  for (const auto* t : {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"})
    EXPECT_EQ(dynkin_type(standard_cartan(t)), t);
}

TEST(Dynkin, RelabeledAndDisconnected) {
  auto a3 = standard_cartan("A3");
  std::vector<std::vector<int>> rev(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rev[i][j] = a3[2 - i][2 - j];
  EXPECT_EQ(dynkin_type(rev), "A3");
  EXPECT_EQ(dynkin_type({{2, 0}, {0, 2}}), "A1xA1");
  EXPECT_EQ(bourbaki_labelings(a3, {0, 1, 2}, "A3").size(), 2u);
  EXPECT_EQ(bourbaki_labelings(standard_cartan("D4"), {0, 1, 2, 3}, "D4").size(), 6u);
}

TEST(JointEigenspaces, IrrationalSpectrumIsUnsupported) {
  QMatrix m(2, 2);
  m(0, 1) = 2;
  m(1, 0) = 1;
  EXPECT_THROW(joint_eigenspaces({m}, {unit_vec<Rational>(2, 0), unit_vec<Rational>(2, 1)}), UnsupportedInputError);
}

TEST(JointEigenspaces, NilpotentOperatorIsRejected) {
  QMatrix m(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(joint_eigenspaces({m}, {unit_vec<Rational>(2, 0), unit_vec<Rational>(2, 1)}), PreconditionError);
}

TEST(SplitTorus, ComplementsTheNilradical) {
  LieAlgebra s = real_hyperbolic(3);
  auto a = split_torus_of_iwasawa(s);
  ASSERT_EQ(a.dim(), 1u);
  EXPECT_EQ((a + nilradical(s).space).dim(), 4u);
  EXPECT_TRUE(is_abelian(s, a));
}

TEST(SplitTorus, CommutingWithMPinsTheRFactor) {
  // the rotations of R^3 kill only the R factor
  LieAlgebra s = real_hyperbolic(3);
  std::vector<QMatrix> rotations;
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      QMatrix r(4, 4);
      r(i, j) = -1;
      r(j, i) = 1;
      rotations.push_back(r);
    }
  auto a = split_torus_of_iwasawa(s, rotations);
  ASSERT_EQ(a.dim(), 1u);
  EXPECT_TRUE(a.contains(unit_vec<Rational>(4, 0)));
}
