#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/reconstruct.hpp"

using namespace iwasawa;

namespace {

LieAlgebra nilradical_algebra(const LieAlgebra& s) { return subalgebra(s, nilradical(s).space.basis()); }

}  // namespace

TEST(Reconstruct, SmallCatalogRoundTrip) {
  for (const auto* l : {"sl(2,R)", "su(2,1)", "so(3,1)", "so(4,1)"}) {
    auto rep = reconstruct_from_iwasawa(iwasawa_of(fixtures::entry(l)));
    ASSERT_TRUE(rep.real_form_label) << l;
    EXPECT_EQ(*rep.real_form_label, l);
    EXPECT_TRUE(rep.rho_simple_check) << l;
    EXPECT_TRUE(rep.satake.same_diagram(fixtures::entry(l).expected_satake)) << l;
  }
}

TEST(Reconstruct, RealHyperbolicPlane) {
  auto rep = reconstruct_from_iwasawa(real_hyperbolic(2));
  EXPECT_EQ(rep.real_form_label, std::optional<std::string>("so(3,1)"));
  EXPECT_EQ(rep.m.m.dim(), 1u);
}

TEST(Reconstruct, StagesAreRecordedAndReportEmbedsConfig) {
  ReconstructionConfig cfg;
  cfg.seeds = {4, 9};
  auto rep = reconstruct_from_iwasawa(iwasawa_of(fixtures::entry("su(2,1)")), cfg);
  std::vector<std::string> names;
  for (const auto& s : rep.stages) names.push_back(s.name);
  EXPECT_EQ(names.front(), "validate");
  EXPECT_EQ(names.back(), "satake");
  Json j = report_to_json(rep);
  EXPECT_EQ(j["config"]["seeds"], Json({4, 9}));
  EXPECT_EQ(j["real_form_label"], "su(2,1)");
  EXPECT_EQ(j["dynkin_type"], "A2");
}

TEST(Reconstruct, NilpotentInputFailsAtValidation) {
  try {
    reconstruct_from_iwasawa(heisenberg());
    FAIL() << "expected a StageError";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "validate");
  }
}

TEST(Isomorphism, HeisenbergWitnesses) {
  for (const auto* l : {"sl(3,R)", "su(2,1)"}) {
    LieAlgebra n = nilradical_algebra(iwasawa_of(fixtures::entry(l)));
    auto w = find_nilpotent_isomorphism(heisenberg(), n);
    ASSERT_TRUE(w) << l;
    EXPECT_TRUE(oracle::preserves_brackets(heisenberg(), n, w->map)) << l;
  }
}

TEST(Isomorphism, DifferentAlgebrasHaveNoWitness) {
  EXPECT_FALSE(find_nilpotent_isomorphism(heisenberg(), LieAlgebra::abelian(3)));
  EXPECT_FALSE(find_nilpotent_isomorphism(heisenberg(), LieAlgebra::abelian(4)));
}

TEST(Extension, IdentityOnSu21) {
  LieAlgebra s = iwasawa_of(fixtures::entry("su(2,1)"));
  auto mc = maximal_compact_derivations(s, {1});
  IsoWitness id{s, s, QMatrix::identity(s.dim())};
  auto ext = extend_isomorphism_to_g0(id, mc.m, mc.m);
  EXPECT_EQ(ext.map, QMatrix::identity(s.dim() + mc.m.dim()));
  EXPECT_TRUE(oracle::preserves_brackets(ext.source, ext.target, ext.map));
}

TEST(Extension, RescalingOfRealHyperbolic) {
  LieAlgebra s = real_hyperbolic(3);
  QMatrix phi = QMatrix::identity(4);
  for (std::size_t i = 1; i < 4; ++i) phi(i, i) = 3;
  ASSERT_TRUE(is_isomorphism(s, s, phi));
  auto mc = maximal_compact_derivations(s, {1});
  auto ext = extend_isomorphism_to_g0(IsoWitness{s, s, phi}, mc.m, mc.m);
  EXPECT_TRUE(oracle::preserves_brackets(ext.source, ext.target, ext.map));
  const std::size_t dm = mc.m.dim();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(ext.map(dm + i, dm + j), phi(i, j));
  // conjugating so(3) by a scalar on R^3 fixes every element
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t b = 0; b < dm; ++b) EXPECT_EQ(ext.map(a, b), a == b ? 1 : 0);
}

TEST(Extension, RejectsMismatchedM) {
  LieAlgebra s = real_hyperbolic(2);
  auto mc = maximal_compact_derivations(s, {1});
  DerivationSpace empty{s, {}};
  EXPECT_THROW(extend_isomorphism_to_g0(IsoWitness{s, s, QMatrix::identity(3)}, mc.m, empty), PreconditionError);
}

TEST(Compare, Verdicts) {
  LieAlgebra sl3 = iwasawa_of(fixtures::entry("sl(3,R)"));
  LieAlgebra su21 = iwasawa_of(fixtures::entry("su(2,1)"));
  auto v = compare_iwasawa(sl3, su21);
  EXPECT_FALSE(v.isomorphic_candidates);
  EXPECT_EQ(v.invariant, "dimension");
  EXPECT_TRUE(compare_iwasawa(su21, su21).isomorphic_candidates);
  auto nil = compare_iwasawa(nilradical_algebra(sl3), nilradical_algebra(su21));
  EXPECT_TRUE(nil.isomorphic_candidates);
  EXPECT_NE(nil.text().find("no explicit isomorphism"), std::string::npos);
}

TEST(Compare, EqualDimensionFormsAreDistinguished) {
  auto v = compare_iwasawa(iwasawa_of(fixtures::entry("su(2,1)")), iwasawa_of(fixtures::entry("so(4,1)")));
  EXPECT_FALSE(v.isomorphic_candidates);
  EXPECT_FALSE(v.invariant.empty());
}
