#pragma once

// Exact kernel for finite-dimensional real Lie algebras given by rational
// structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.

#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/linalg.hpp"

namespace iwasawa {

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `structure` is row-major c(i,j,k) of size dim^3. No validation beyond the shape.
  LieAlgebra(std::vector<std::string> names, std::vector<Rational> structure);
  /// Zero bracket on `dim` basis vectors named e1..en.
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Rational>& table() const { return table_; }
  /// ad(e_i) as a dim x dim matrix acting on coordinate columns.
  const QMatrix& ad_basis(std::size_t i) const { return ad_[i]; }

  QVec bracket(const QVec& x, const QVec& y) const;
  QMatrix ad(const QVec& x) const;
  /// Index of a basis name, or dim() when absent.
  std::size_t index_of(const std::string& name) const;

  /// Same algebra with all structure constants multiplied by t.
  LieAlgebra scaled(const Rational& t) const;

  /// Stable 64-bit FNV-1a digest of names and structure constants.
  std::uint64_t hash() const;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> table_;
  std::vector<QMatrix> ad_;
};

struct Violation {
  std::size_t i, j, k;
  std::string kind;  // "antisymmetry" or "jacobi"
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Antisymmetry on all (i,j,k) and Jacobi on all basis triples, exactly.
ValidationReport validate(const LieAlgebra& alg);

/// A linear subspace of Q^n, stored as the nonzero rows of a reduced echelon form,
/// so two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const std::vector<QVec>& spanning);
  static Subspace whole(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Basis of a complement, chosen among the standard unit vectors.
  std::vector<QVec> complement_basis() const;
  /// Rows spanning the annihilator: v in S iff annihilator * v = 0.
  QMatrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<QVec> basis_;
};

/// An exact symmetric bilinear form on a Lie algebra's basis.
struct SymmetricForm {
  QMatrix matrix;
  bool is_symmetric() const { return matrix == matrix.transpose(); }
  Rational operator()(const QVec& x, const QVec& y) const;
};

/// Inertia (positive, negative, zero) counts of an exact symmetric matrix.
struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};
Inertia inertia(const QMatrix& symmetric);

Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);
bool is_ideal(const LieAlgebra& alg, const Subspace& s);
bool is_abelian(const LieAlgebra& alg, const Subspace& s);

/// B(x,y) = tr(ad x ad y).
SymmetricForm killing_form(const LieAlgebra& alg);
/// Trace form of the adjoint action of `alg` restricted to an invariant subspace.
QMatrix restricted_trace_form(const LieAlgebra& alg, const std::vector<QVec>& acting,
                              const Subspace& invariant);

std::vector<Subspace> derived_series(const LieAlgebra& alg);
std::vector<Subspace> lower_central_series(const LieAlgebra& alg);
bool is_solvable(const LieAlgebra& alg);
bool is_nilpotent(const LieAlgebra& alg);
/// Solvable with every ad-eigenvalue real (checked exactly via Sturm sequences).
bool is_completely_solvable(const LieAlgebra& alg);

struct NilradicalCertificate {
  bool ideal = false;
  bool nilpotent = false;
  bool contains_derived = false;
  bool quotient_semisimple = false;  // informational
};

struct Nilradical {
  Subspace space;
  NilradicalCertificate certificate;
};

/// Maximal nilpotent ideal of a solvable algebra: the radical of the Killing form,
/// certified nilpotent. Throws PreconditionError for non-solvable input and
/// UnsupportedInputError when the certificate fails.
Nilradical nilradical(const LieAlgebra& alg);

Subspace centralizer(const LieAlgebra& alg, const Subspace& s);
Subspace normalizer(const LieAlgebra& alg, const Subspace& s);
Subspace center(const LieAlgebra& alg);

/// Standalone algebra on the given (ordered, independent, bracket-closed) vectors.
LieAlgebra subalgebra(const LieAlgebra& alg, const std::vector<QVec>& basis,
                      std::vector<std::string> names = {});

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& alg, const QMatrix& d);

/// m ⋉ L for a bracket-closed family of derivations m. The first |m| basis vectors
/// are the derivations (named D1.. unless names given), followed by L's basis.
LieAlgebra semidirect_product(const std::vector<QMatrix>& derivations, const LieAlgebra& alg,
                              std::vector<std::string> derivation_names = {});

/// Coordinates of a matrix in the span of `basis`, or nothing.
std::optional<QVec> matrix_coordinates(const std::vector<QMatrix>& basis, const QMatrix& m);

/// True iff `map` (columns = images of source basis) is invertible and preserves brackets.
bool is_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const QMatrix& map);

}  // namespace iwasawa
