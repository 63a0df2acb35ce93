#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/json_io.hpp"

using namespace iwasawa;

namespace {

Json h3_json() {
  return Json::parse(R"({"dim": 3, "basis": ["X", "Y", "Z"],
    "brackets": [{"left": "X", "right": "Y", "result": {"Z": "1"}}]})");
}

}  // namespace

TEST(Json, ParsesAndCompletesAntisymmetry) {
  LieAlgebra h = algebra_from_json(h3_json());
  ASSERT_EQ(h.dim(), 3u);
  EXPECT_EQ(h.c(0, 1, 2), 1);
  EXPECT_EQ(h.c(1, 0, 2), -1);
  EXPECT_TRUE(validate(h).ok);
}

TEST(Json, RoundTrip) {
  for (const auto& alg : fixtures::generated_algebras()) {
    LieAlgebra back = algebra_from_json(algebra_to_json(alg));
    EXPECT_EQ(back.names(), alg.names());
    EXPECT_EQ(back.table(), alg.table());
    EXPECT_EQ(back.hash(), alg.hash());
  }
}

TEST(Json, DoubleSpecificationIsFormatError) {
  Json j = h3_json();
  j["brackets"].push_back({{"left", "Y"}, {"right", "X"}, {"result", {{"Z", "-1"}}}});
  EXPECT_THROW(algebra_from_json(j), FormatError);
}

TEST(Json, RejectsMalformedInput) {
  Json j = h3_json();
  j["dim"] = 4;
  EXPECT_THROW(algebra_from_json(j), FormatError);
  j = h3_json();
  j["brackets"][0]["result"] = {{"W", "1"}};
  EXPECT_THROW(algebra_from_json(j), FormatError);
  j = h3_json();
  j["brackets"][0]["result"] = {{"Z", "1/0"}};
  EXPECT_THROW(algebra_from_json(j), FormatError);
  j = h3_json();
  j["brackets"][0]["result"] = {{"Z", "one"}};
  EXPECT_THROW(algebra_from_json(j), FormatError);
}

TEST(Json, RationalStrings) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
}

TEST(Validate, ReportsJacobiViolation) {
  // [X,Y] = Y, [Y,Z] = X: Jacobi fails on (X, Y, Z)
  Json j = Json::parse(R"({"dim": 3, "basis": ["X", "Y", "Z"], "brackets": [
    {"left": "X", "right": "Y", "result": {"Y": "1"}},
    {"left": "Y", "right": "Z", "result": {"X": "1"}}]})");
  auto rep = validate(algebra_from_json(j));
  EXPECT_FALSE(rep.ok);
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_EQ(rep.violations.front().kind, "jacobi");
}

TEST(Validate, RawTableAntisymmetry) {
  std::vector<Rational> t(8, Rational(0));
  t[(0 * 2 + 1) * 2 + 1] = 1;  // [e1,e2] = e2 but [e2,e1] left at 0
  auto rep = validate(LieAlgebra({"e1", "e2"}, t));
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.violations.front().kind, "antisymmetry");
}

TEST(Properties, JacobiOnEveryGeneratedAlgebra) {
  for (const auto& alg : fixtures::generated_algebras()) EXPECT_TRUE(validate(alg).ok);
}

TEST(Catalog, StructureConstantsMatchMatrixCommutators) {
  for (const auto& l : catalog_labels()) {
    const auto& e = fixtures::entry(l);
    std::vector<QMatrix> mats;
    for (const auto& m : e.realization) mats.push_back(fixtures::realify(m));
    LieAlgebra ref = oracle::from_matrices(e.g.names(), mats);
    EXPECT_EQ(ref.table(), e.g.table()) << l;
  }
}

TEST(Killing, MatchesDirectTraceSum) {
  for (const auto& alg : fixtures::generated_algebras())
    EXPECT_EQ(killing_form(alg).matrix, oracle::killing(alg));
}

TEST(Properties, KillingAdInvariance) {
  // B([x,y],z) + B(y,[x,z]) = 0 on basis triples
  for (const auto& alg : fixtures::generated_algebras()) {
    auto b = killing_form(alg);
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto x = unit_vec<Rational>(n, i), y = unit_vec<Rational>(n, j), z = unit_vec<Rational>(n, k);
          ASSERT_EQ(b(alg.bracket(x, y), z) + b(y, alg.bracket(x, z)), 0);
        }
  }
}

TEST(Killing, SignatureOfSl2) {
  auto in = inertia(killing_form(fixtures::entry("sl(2,R)").g).matrix);
  EXPECT_EQ(in.positive, 2u);
  EXPECT_EQ(in.negative, 1u);
  EXPECT_EQ(in.zero, 0u);
}

TEST(Series, Heisenberg) {
  LieAlgebra h = heisenberg();
  auto lcs = lower_central_series(h);
  ASSERT_GE(lcs.size(), 3u);
  EXPECT_EQ(lcs[0].dim(), 3u);
  EXPECT_EQ(lcs[1].dim(), 1u);
  EXPECT_EQ(lcs[2].dim(), 0u);
  EXPECT_TRUE(is_nilpotent(h));
  EXPECT_EQ(center(h).dim(), 1u);
  EXPECT_TRUE(center(h).contains(unit_vec<Rational>(3, 2)));
}

TEST(Nilradical, RealHyperbolicIsTheAbelianIdeal) {
  for (std::size_t n = 1; n <= 4; ++n) {
    LieAlgebra s = real_hyperbolic(n);
    auto nr = nilradical(s);
    EXPECT_EQ(nr.space.dim(), n);
    EXPECT_FALSE(nr.space.contains(unit_vec<Rational>(n + 1, 0)));
    EXPECT_TRUE(nr.certificate.ideal && nr.certificate.nilpotent && nr.certificate.contains_derived);
    EXPECT_TRUE(is_abelian(s, nr.space));
  }
}

TEST(Nilradical, Su21IwasawaContainsHeisenberg) {
  LieAlgebra s = iwasawa_of(fixtures::entry("su(2,1)"));
  auto nr = nilradical(s);
  ASSERT_EQ(nr.space.dim(), 3u);
  LieAlgebra n = subalgebra(s, nr.space.basis());
  EXPECT_EQ(lower_central_series(n)[1].dim(), 1u);
  EXPECT_EQ(center(n).dim(), 1u);
}

TEST(Solvability, CompleteSolvabilityDistinguishesRotations) {
  // e(2): [A,X] = Y, [A,Y] = -X is solvable but not completely solvable
  std::vector<Rational> t(27, Rational(0));
  auto set = [&](int i, int j, int k, int v) {
    t[(i * 3 + j) * 3 + k] = v;
    t[(j * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 2, 1);
  set(0, 2, 1, -1);
  LieAlgebra e2({"A", "X", "Y"}, t);
  EXPECT_TRUE(validate(e2).ok);
  EXPECT_TRUE(is_solvable(e2));
  EXPECT_FALSE(is_completely_solvable(e2));
  EXPECT_TRUE(is_completely_solvable(real_hyperbolic(2)));
}

TEST(Subspace, CanonicalBasisIsOrderIndependent) {
  QVec a{1, 2, 0}, b{0, 1, 1};
  Subspace s(3, {a, b}), t(3, {axpy(Rational(1), a, b), b});
  EXPECT_EQ(s.basis(), t.basis());
  EXPECT_EQ(s.intersect(Subspace(3, {unit_vec<Rational>(3, 2)})).dim(), 0u);
  EXPECT_EQ((s + Subspace(3, {unit_vec<Rational>(3, 2)})).dim(), 3u);
}
