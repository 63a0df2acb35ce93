#pragma once

#include <vector>

#include "iwasawa/lie_algebra.hpp"

namespace iwasawa {

/// A matrix Lie algebra of derivations of `ambient`.
struct DerivationSpace {
  LieAlgebra ambient;
  std::vector<QMatrix> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const QMatrix& d) const { return matrix_coordinates(basis, d).has_value(); }
  /// Commutator of any two basis elements lies in the span.
  bool is_bracket_closed() const;
  /// Structure constants of the span, in the order of `basis`.
  LieAlgebra as_algebra() const;
};

struct Derivation {
  QMatrix matrix;
};

/// Exact basis of Der(L): the solution space of the Leibniz system, closure verified.
DerivationSpace derivation_algebra(const LieAlgebra& alg);

/// ad(e_1), ..., ad(e_n) (linearly dependent when L has a center).
std::vector<QMatrix> inner_derivations(const LieAlgebra& alg);

/// Derivations diagonal in the given basis.
DerivationSpace diagonal_derivations(const LieAlgebra& alg);

struct SplitTorus {
  DerivationSpace torus;
  /// True when the trace form on the torus' complement inside its centralizer in
  /// Der(L) has no positive direction, so no split element was missed.
  bool certified_maximal = false;
  int extension_steps = 0;
};

/// Abelian subalgebra of Der(N) of simultaneously real-diagonalizable derivations, grown
/// greedily from the diagonal derivations inside their centralizer.
SplitTorus maximal_split_torus_in_der(const LieAlgebra& nilpotent, int max_steps = 32);

/// The derivation phi in a maximal split torus with tr(phi psi) = tr(psi) for every
/// psi in Der(N); the identity is checked on all of Der(N), and phi is checked to be
/// semisimple with rational eigenvalues.
Derivation pre_einstein_derivation(const LieAlgebra& nilpotent);

}  // namespace iwasawa
