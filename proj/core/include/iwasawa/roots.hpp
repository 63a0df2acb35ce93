#pragma once

// Restricted roots of s = a + n, complex roots of g>=0(C), Cartan matrices and Dynkin types.

#include <optional>
#include <string>
#include <vector>

#include "iwasawa/lie_algebra.hpp"

namespace iwasawa {

/// Split torus of an Iwasawa-type algebra: an abelian complement to the nilradical
/// acting semisimply with rational eigenvalues, found as the Fitting null space of a
/// generic element. When `annihilators` is nonempty the torus is chosen inside the
/// common kernel of those derivations (e.g. the recovered m, so that [m, a] = 0).
Subspace split_torus_of_iwasawa(const LieAlgebra& s, const std::vector<QMatrix>& annihilators = {});

struct RestrictedRoot {
  QVec functional;  ///< values on the torus basis
  Subspace space;
  bool positive = false;
};

struct RestrictedRootDatum {
  std::vector<QVec> torus;  ///< ordered basis of a, coordinates in the ambient algebra
  Subspace centralizer;     ///< g_0
  std::vector<RestrictedRoot> roots;  ///< positives first, each group in lexicographic order
};

/// Joint eigenspaces of ad(a) on the algebra. Positivity: lexicographic on the values
/// at the torus basis, unless `order` (a functional on the torus basis, nonzero on
/// every root) is given, in which case its sign decides first.
RestrictedRootDatum restricted_root_decomposition(const LieAlgebra& alg, const std::vector<QVec>& torus,
                                                  const std::optional<QVec>& order = std::nullopt);

/// Joint eigenspace decomposition of commuting rational operators on the subspace
/// `on` (invariant under each). Returns (eigenvalue tuple, basis) pairs; throws
/// UnsupportedInputError naming the polynomial when an eigenvalue is irrational and
/// PreconditionError when an operator is not semisimple on `on`.
struct JointEigenspace {
  QVec weight;
  std::vector<QVec> basis;
};
std::vector<JointEigenspace> joint_eigenspaces(const std::vector<QMatrix>& ops, const std::vector<QVec>& on);

/// A Lie algebra over the Gaussian rationals; `conjugation` is the entrywise
/// conjugation of coordinates, which fixes the real form it came from.
class ComplexAlgebra {
 public:
  ComplexAlgebra() = default;
  ComplexAlgebra(std::vector<std::string> names, std::vector<Gaussian> table);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Gaussian& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim() + j) * dim() + k]; }
  const CMatrix& ad_basis(std::size_t i) const { return ad_[i]; }
  CMatrix ad(const CVec& x) const;
  CVec bracket(const CVec& x, const CVec& y) const;
  CVec conjugation(const CVec& x) const;
  bool is_valid() const;  ///< antisymmetry and Jacobi, exactly

 private:
  std::vector<std::string> names_;
  std::vector<Gaussian> table_;
  std::vector<CMatrix> ad_;
};

ComplexAlgebra complexify(const LieAlgebra& alg);

/// Killing form tr(ad x ad y) of a complex algebra restricted to the span of `on`
/// (coordinates in the ambient basis), computed on the invariant subspace `space`
/// (whole algebra when empty).
CMatrix complex_trace_form(const ComplexAlgebra& alg, const std::vector<CVec>& on,
                           const std::vector<CVec>& space = {});

/// t + a, with t a maximal abelian subalgebra of the compact m (greedy extension by
/// centralizers). Returned basis order: a first (in the given order), then t.
struct CartanSubalgebra {
  std::vector<QVec> a;
  std::vector<QVec> t;
  std::vector<QVec> basis() const;
};
CartanSubalgebra cartan_subalgebra(const LieAlgebra& g_geq0, const Subspace& m, const std::vector<QVec>& a);

struct ComplexRoot {
  CVec functional;  ///< values on the Cartan basis (a first, then t)
  CVec vector;      ///< root vector, coordinates in gC
  QVec rho;         ///< restriction to a
  bool positive = false;
};

struct ComplexRootDatum {
  std::vector<CVec> cartan;  ///< basis of hC in gC coordinates
  std::size_t split_rank = 0;  ///< the first split_rank Cartan vectors span a
  std::vector<ComplexRoot> roots;
  std::vector<std::size_t> simple;  ///< indices into roots, in increasing order
  std::vector<QVec> ordering;       ///< lexicographic functionals on (Re a-values, Im t-values)
};

/// Roots of hC on gC. `ordering` is a list of rational functionals on the real vector
/// (a-values, imaginary parts of t-values); the first nonzero one decides positivity.
/// Every root space must be one-dimensional. Throws InconsistencyError with the offending
/// root when the ordering vanishes on it, UnsupportedInputError for non-Gaussian spectra.
ComplexRootDatum complex_root_decomposition(const ComplexAlgebra& gC, const std::vector<CVec>& cartan,
                                            std::size_t split_rank, const std::vector<QVec>& ordering);

struct CartanMatrixData {
  std::vector<std::vector<int>> matrix;
  std::string type;  ///< e.g. "A2", "A1xA1", "E6"
};

/// A[i][j] = 2<a_i,a_j>/<a_j,a_j> for the form `form` on hC (Gram matrix on the Cartan
/// basis). Throws InconsistencyError on non-integer entries, UnsupportedInputError when
/// the diagram is not a finite type.
CartanMatrixData cartan_matrix(const std::vector<CVec>& simple_functionals, const CMatrix& form);

/// Type string of an integer Cartan matrix (components in node order joined by "x").
std::string dynkin_type(const std::vector<std::vector<int>>& cartan);

struct DynkinComponent {
  std::string type;                ///< e.g. "A2"
  std::vector<std::size_t> nodes;  ///< nodes[k] = input node sitting at Bourbaki position k
};
/// Connected components with one Bourbaki labeling each.
std::vector<DynkinComponent> dynkin_components(const std::vector<std::vector<int>>& cartan);
/// Every labeling of `nodes` (a connected component of `cartan`) matching the standard
/// Bourbaki matrix of `type`.
std::vector<std::vector<std::size_t>> bourbaki_labelings(const std::vector<std::vector<int>>& cartan,
                                                         const std::vector<std::size_t>& nodes,
                                                         const std::string& type);
/// Standard Cartan matrix of a simple type ("A3", "E6", ...), Bourbaki node order.
std::vector<std::vector<int>> standard_cartan(const std::string& type);

struct KillingRelationReport {
  bool holds = false;
  std::vector<std::pair<std::size_t, std::size_t>> offending;
  CMatrix b_g;  ///< B_g on h
  CMatrix b_b;  ///< B_b on h
};
/// Checks B_b(x,y) = 1/2 B_g(x,y) exactly on the Cartan basis, b = h + positive root spaces.
KillingRelationReport borel_killing_relation_check(const ComplexAlgebra& gC, const ComplexRootDatum& roots);

}  // namespace iwasawa
