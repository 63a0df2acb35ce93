#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "iwasawa/einstein.hpp"
#include "iwasawa/errors.hpp"

using namespace iwasawa;

namespace {

double rel_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-300);
}

/// Central differences of the functional along frame -> (I + h E_kl) frame.
Eigen::MatrixXd fd_gradient(const LieAlgebra& alg, const Eigen::MatrixXd& frame, double h) {
  const auto n = frame.rows();
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(k, l) = h;
      Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
      out(k, l) = (einstein_functional(alg, (id + e) * frame) - einstein_functional(alg, (id - e) * frame)) / (2 * h);
    }
  return out;
}

}  // namespace

TEST(Ricci, MatchesKoszulFormula) {
  std::mt19937_64 rng(7);
  std::vector<LieAlgebra> algs{heisenberg(), real_hyperbolic(2), iwasawa_of(fixtures::entry("su(2,1)")),
                               fixtures::entry("sl(2,R)").g, iwasawa_of(fixtures::entry("sl(3,R)"))};
  for (const auto& alg : algs)
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::MatrixXd g = fixtures::random_metric(static_cast<int>(alg.dim()), rng);
      EXPECT_LT(rel_error(ricci(alg, g), oracle::koszul_ricci(alg, g)), 1e-10);
    }
}

TEST(Ricci, HyperbolicSpaceIsEinstein) {
  // R ⋉ R^n with the standard metric is real hyperbolic space, Ric = -n g
  for (std::size_t n = 1; n <= 4; ++n) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(static_cast<int>(n + 1), static_cast<int>(n + 1));
    Eigen::MatrixXd r = ricci(real_hyperbolic(n), g);
    EXPECT_LT((r + static_cast<double>(n) * g).norm(), 1e-12);
    EXPECT_NEAR(scalar_curvature(real_hyperbolic(n), g), -static_cast<double>(n * (n + 1)), 1e-12);
    EXPECT_TRUE(verify_einstein(real_hyperbolic(n), g, 1e-12).ok);
  }
}

/// Error relative to the largest of |fd|, |analytic| and F itself: on h3 the functional is
/// constant, the gradient vanishes and the differences are pure rounding noise.
double gradient_error(const LieAlgebra& alg, const Eigen::MatrixXd& frame) {
  Eigen::MatrixXd an = einstein_gradient(alg, frame), fd = fd_gradient(alg, frame, 1e-5);
  double scale = std::max({fd.norm(), an.norm(), std::abs(einstein_functional(alg, frame))});
  return (an - fd).norm() / scale;
}

TEST(Gradient, MatchesCentralDifferences) {
  std::mt19937_64 rng(2024);
  for (const auto& alg : {heisenberg(), iwasawa_of(fixtures::entry("su(2,1)"))}) {
    const int n = static_cast<int>(alg.dim());
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd frame = Eigen::LLT<Eigen::MatrixXd>(fixtures::random_metric(n, rng)).matrixU();
      EXPECT_LT(gradient_error(alg, frame), 1e-6);
    }
  }
}

TEST(Gradient, NonzeroOnSu21) {
  std::mt19937_64 rng(99);
  LieAlgebra s = iwasawa_of(fixtures::entry("su(2,1)"));
  Eigen::MatrixXd frame = Eigen::LLT<Eigen::MatrixXd>(fixtures::random_metric(4, rng)).matrixU();
  Eigen::MatrixXd fd = fd_gradient(s, frame, 1e-5);
  EXPECT_GT(fd.norm(), 1e-3);
  EXPECT_LT(rel_error(einstein_gradient(s, frame), fd), 1e-6);
}

TEST(Solver, RealHyperbolicConstants) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto r = einstein_solve(real_hyperbolic(n), seed);
      ASSERT_TRUE(r.converged) << r.diagnostics;
      EXPECT_LE(r.residual, 1e-10);
      EXPECT_NEAR(r.normalized_einstein_constant, -static_cast<double>(n), 1e-8 * n);
      EXPECT_NEAR(r.metric.matrix.determinant(), 1.0, 1e-9);
    }
}

TEST(Solver, DeterministicForFixedSeed) {
  LieAlgebra s = iwasawa_of(fixtures::entry("su(2,1)"));
  auto a = einstein_solve(s, 5), b = einstein_solve(s, 5);
  EXPECT_EQ(a.metric.matrix, b.metric.matrix);
  EXPECT_EQ(a.metric.full_precision, b.metric.full_precision);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Solver, ComplexHyperbolicPolish) {
  SolverParams p;
  p.precision_bits = 256;
  auto r = einstein_solve(iwasawa_of(fixtures::entry("su(2,1)")), 1, p);
  ASSERT_TRUE(r.converged);
  EXPECT_EQ(r.metric.precision_bits, 256);
  EXPECT_EQ(r.metric.full_precision.size(), 16u);
  EXPECT_LE(r.residual, 1e-10);
}

TEST(Solver, RejectsRotations) {
  std::vector<Rational> t(27, Rational(0));
  t[(0 * 3 + 1) * 3 + 2] = 1;
  t[(1 * 3 + 0) * 3 + 2] = -1;
  t[(0 * 3 + 2) * 3 + 1] = -1;
  t[(2 * 3 + 0) * 3 + 1] = 1;
  EXPECT_THROW(einstein_solve(LieAlgebra({"A", "X", "Y"}, t), 1), PreconditionError);
}

TEST(Nilsoliton, HeisenbergRatios) {
  auto r = nilsoliton_solve(heisenberg(), 1);
  Eigen::EigenSolver<Eigen::MatrixXd> es(r.derivation);
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < 3; ++i) ev.push_back(es.eigenvalues()(i).real());
  std::sort(ev.begin(), ev.end());
  ASSERT_GT(std::abs(ev[0]), 1e-6);
  EXPECT_NEAR(ev[1] / ev[0], 1.0, 1e-6);
  EXPECT_NEAR(ev[2] / ev[0], 2.0, 1e-6);
  EXPECT_LT(r.leibniz_residual, 1e-8);
}
