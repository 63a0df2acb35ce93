#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "iwasawa/errors.hpp"

using namespace iwasawa;

TEST(Catalog, EveryEntryPassesItsChecks) {
  for (const auto& l : catalog_labels()) {
    auto check = check_entry(fixtures::entry(l));
    EXPECT_TRUE(check.ok) << l << ": " << (check.failures.empty() ? "" : check.failures.front());
  }
}

TEST(Catalog, Dimensions) {
  struct Row {
    const char* label;
    std::size_t g, k, a, n, m;
  };
  for (const Row& r : {Row{"sl(2,R)", 3, 1, 1, 1, 0}, Row{"sl(3,R)", 8, 3, 2, 3, 0}, Row{"su(2,1)", 8, 4, 1, 3, 1},
                       Row{"su(3,1)", 15, 9, 1, 5, 4}, Row{"so(3,1)", 6, 3, 1, 2, 1}, Row{"so(4,1)", 10, 6, 1, 3, 3},
                       Row{"sp(4,R)", 10, 4, 2, 4, 0}}) {
    const auto& e = fixtures::entry(r.label);
    EXPECT_EQ(e.g.dim(), r.g) << r.label;
    EXPECT_EQ(e.k.dim(), r.k) << r.label;
    EXPECT_EQ(e.a.dim(), r.a) << r.label;
    EXPECT_EQ(e.n.dim(), r.n) << r.label;
    EXPECT_EQ(e.m.dim(), r.m) << r.label;
    EXPECT_EQ(e.iwasawa.dim(), r.a + r.n) << r.label;
  }
}

TEST(Catalog, KillingSignatureIsCartanSignature) {
  for (const auto& l : catalog_labels()) {
    const auto& e = fixtures::entry(l);
    auto in = inertia(oracle::killing(e.g));
    EXPECT_EQ(in.zero, 0u) << l;
    EXPECT_EQ(in.negative, e.k.dim()) << l;
    EXPECT_EQ(in.positive, e.a.dim() + e.n.dim()) << l;
  }
}

TEST(Catalog, IwasawaOfSl2IsTheNonabelianPlane) {
  LieAlgebra s = iwasawa_of(fixtures::entry("sl(2,R)"));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_FALSE(is_abelian(s, Subspace::whole(2)));
}

TEST(Catalog, So41IwasawaIsRealHyperbolic) {
  LieAlgebra s = iwasawa_of(fixtures::entry("so(4,1)"));
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_TRUE(is_abelian(s, nilradical(s).space));
  EXPECT_EQ(nilradical(s).space.dim(), 3u);
}

TEST(Catalog, LabelsAreSymmetricInPQ) {
  EXPECT_EQ(catalog_entry("su(1,2)").g.dim(), 8u);
  EXPECT_EQ(catalog_entry("so(1,3)").m.dim(), 1u);
}

TEST(Catalog, Rejections) {
  EXPECT_THROW(catalog_entry("sl(9,R)"), PreconditionError);
  EXPECT_THROW(catalog_entry("g2"), PreconditionError);
  EXPECT_THROW(build_classical("so", {3, 0}), PreconditionError);
}

TEST(Catalog, ExpectedSatake) {
  EXPECT_EQ(color_string(expected_satake("sl(3,R)")), "oo");
  EXPECT_TRUE(expected_satake("sl(3,R)").arrows.empty());
  EXPECT_EQ(expected_satake("su(2,1)").arrows.size(), 1u);
  for (const auto& l : catalog_labels())
    EXPECT_TRUE(fixtures::entry(l).expected_satake.same_diagram(expected_satake(l))) << l;
}
