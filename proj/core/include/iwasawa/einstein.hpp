#pragma once

// Left-invariant Einstein and nilsoliton metrics on solvable Lie algebras.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/lie_algebra.hpp"

namespace iwasawa {

/// A left-invariant metric: symmetric positive-definite on the algebra's basis.
struct InnerProduct {
  Eigen::MatrixXd matrix;
  /// Row-major decimal entries at `precision_bits` (filled by the high-precision polish).
  std::vector<std::string> full_precision;
  int precision_bits = 53;
};

enum class MetricAnsatz {
  Full,      ///< g = L^T L with L arbitrary
  Diagonal,  ///< g diagonal in the input basis
};

struct SolverParams {
  double tol = 1e-10;
  int max_iters = 20000;
  int precision_bits = 256;
  int polish_iters = 400;
  MetricAnsatz ansatz = MetricAnsatz::Full;
};

struct MetricResult {
  InnerProduct metric;  ///< unit determinant
  double einstein_constant = 0;
  /// einstein_constant * |A mod n|^2 for the first basis vector A outside the nilradical;
  /// invariant under scaling and automorphisms (equals -n on the real hyperbolic space).
  double normalized_einstein_constant = 0;
  double residual = 0;  ///< g-operator norm of Ric - (scal/dim) g
  int iterations = 0;
  bool converged = false;
  std::vector<double> ricci_spectrum;  ///< sorted eigenvalues of g^{-1} Ric
  std::string normalization;
  std::string diagnostics;
};

/// Ricci tensor (as a bilinear form on the input basis) of the metric g.
Eigen::MatrixXd ricci(const LieAlgebra& alg, const Eigen::MatrixXd& g);
double scalar_curvature(const LieAlgebra& alg, const Eigen::MatrixXd& g);

struct EinsteinCheck {
  bool ok = false;
  double residual = 0;
};
EinsteinCheck verify_einstein(const LieAlgebra& alg, const Eigen::MatrixXd& g, double tol);

/// Scale-invariant functional |Ric - (scal/dim) g|^2 / scal^2 at the metric g = frame^T frame.
double einstein_functional(const LieAlgebra& alg, const Eigen::MatrixXd& frame);
/// Gradient of einstein_functional in the direction frame -> (I + eps E) frame, as the
/// matrix of partial derivatives in E. Computed from the bilinear structure of the Ricci
/// formula, not by differencing.
Eigen::MatrixXd einstein_gradient(const LieAlgebra& alg, const Eigen::MatrixXd& frame);

/// Seeded descent for an Einstein metric on a completely solvable algebra.
/// Throws PreconditionError if the algebra is not completely solvable.
MetricResult einstein_solve(const LieAlgebra& alg, std::uint64_t seed, const SolverParams& params = {});

struct NilsolitonResult {
  MetricResult metric;          ///< metric restricted to N; einstein_constant holds c
  Eigen::MatrixXd derivation;   ///< D = Ric - c Id as an operator on the input basis
  double leibniz_residual = 0;  ///< max |D[x,y] - [Dx,y] - [x,Dy]| on orthonormal pairs
  double soliton_constant = 0;
};

/// Nilsoliton Ric = c Id + D via the Einstein metric on R(phi) ⋉ N, phi pre-Einstein.
NilsolitonResult nilsoliton_solve(const LieAlgebra& nilpotent, std::uint64_t seed,
                                  const SolverParams& params = {});

/// Precision-aware formatting of a metric for output.
std::vector<std::string> format_metric(const InnerProduct& g);

}  // namespace iwasawa
