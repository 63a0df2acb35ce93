#pragma once

// Classical real semisimple Lie algebras from matrix realizations, with their
// Iwasawa decompositions g = k + a + n and m = Z_k(a).

#include <string>
#include <vector>

#include "iwasawa/lie_algebra.hpp"
#include "iwasawa/satake.hpp"

namespace iwasawa {

struct CatalogEntry {
  std::string label;  ///< "sl(3,R)", "su(2,1)", "so(4,1)", "sp(4,R)", ...
  std::string family;
  std::vector<int> params;
  LieAlgebra g;  ///< basis ordered k, then a, then n
  Subspace k, a, n, m, iwasawa;
  /// Matrices of g's basis, all of size `matrix_size`; real families have zero imaginary parts.
  std::vector<CMatrix> realization;
  std::size_t matrix_size = 0;
  SatakeDiagram expected_satake;
};

/// family: "sl" {n}, "su" {p,q}, "so" {p,q}, "sp" {2n} (the split sp(2n,R)).
/// Throws PreconditionError for unsupported parameters or dim g > max_dim.
CatalogEntry build_classical(const std::string& family, const std::vector<int>& params, std::size_t max_dim = 50);

/// Parses labels like "sl(3,R)", "su(2,1)", "so(4,1)", "sp(4,R)".
CatalogEntry catalog_entry(const std::string& label, std::size_t max_dim = 50);

/// The shipped entries: sl(2,R), sl(3,R), su(2,1), su(3,1), so(3,1), so(4,1), sp(4,R).
std::vector<std::string> catalog_labels();

/// Standalone copy of a + n (basis A1.., N1..).
LieAlgebra iwasawa_of(const CatalogEntry& entry);

/// R ⋉ R^n with [A, X_i] = X_i, the Iwasawa algebra of so(n+1,1).
LieAlgebra real_hyperbolic(std::size_t n);

/// The 3-dimensional Heisenberg algebra h3: [X, Y] = Z.
LieAlgebra heisenberg();

SatakeDiagram expected_satake(const std::string& label);

struct EntryCheck {
  bool ok = true;
  std::vector<std::string> failures;
};
/// Every structural invariant of an entry, checked exactly.
EntryCheck check_entry(const CatalogEntry& entry);

}  // namespace iwasawa
