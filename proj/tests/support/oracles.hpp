#pragma once

// Reference computations that share no code with the library beyond its value types.
// Each one takes the long way round: explicit matrices, textbook formulas, naive loops.

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "iwasawa/lie_algebra.hpp"

namespace oracle {

using iwasawa::LieAlgebra;
using iwasawa::QMatrix;
using iwasawa::QVec;
using iwasawa::Rational;
using CMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

/// Kernel of a rational matrix by plain Gauss-Jordan elimination.
std::vector<QVec> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols);

/// Coordinates of `target` in the span of `basis` (all same-shape rational matrices), or
/// an empty vector if it is not in the span.
QVec coordinates(const std::vector<QMatrix>& basis, const QMatrix& target);

/// Structure constants from commutators of linearly independent matrices.
LieAlgebra from_matrices(const std::vector<std::string>& names, const std::vector<QMatrix>& mats);

/// Killing form as sum_{k,l} c_ik^l c_jl^k, straight from the table.
QMatrix killing(const LieAlgebra& alg);

/// Every linear map D with D[x,y] = [Dx,y] + [x,Dy], from the n^3 Leibniz equations.
std::vector<QMatrix> leibniz_derivations(const LieAlgebra& alg);

/// Ricci form in the input basis for the metric g, via the Koszul formula in an
/// orthonormal frame and R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
Eigen::MatrixXd koszul_ricci(const LieAlgebra& alg, const Eigen::MatrixXd& g);

/// tr(ad X ad Y) over the span of `space` (invariant under X and Y), for complex
/// matrices, by least squares coordinates. Used for Borel trace forms.
std::complex<double> trace_form_on_span(const std::vector<CMat>& space, const CMat& x, const CMat& y);

/// Centralizer of `a` inside `k`, both given as matrix spans; returns its dimension.
std::size_t centralizer_dim(const std::vector<CMat>& k, const std::vector<CMat>& a);

/// Left-nested bracket words test: does `map` (columns = images) preserve brackets?
bool preserves_brackets(const LieAlgebra& source, const LieAlgebra& target, const QMatrix& map);

}  // namespace oracle
