#pragma once

// Maximal compact subalgebras of Der(s) as skew-symmetric derivations of an Einstein
// metric, rationalized and certified exactly.

#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/derivations.hpp"
#include "iwasawa/einstein.hpp"

namespace iwasawa {

struct CompactCertificate {
  DerivationSpace subalgebra;
  /// Killing form negative semidefinite with radical equal to the center.
  bool killing_negdef_on_derived = false;
  /// Basis and center elements semisimple with purely imaginary spectrum.
  bool spectra_imaginary = false;
  bool rationalized = false;
  bool valid() const { return killing_negdef_on_derived && spectra_imaginary && rationalized; }
};

/// Exact check of the two certificate conditions; `rationalized` is set (the input is exact).
CompactCertificate compactness_certificate(const DerivationSpace& h);

struct SkewDerivations {
  DerivationSpace space;                 ///< exact basis (empty when not rationalized)
  std::vector<Eigen::MatrixXd> numeric;  ///< numeric basis of the kernel
  std::size_t numeric_dim = 0;
  bool rationalized = false;
  double skew_residual = 0;  ///< max |g(Dx,y) + g(x,Dy)| over the rational basis, orthonormal frame
  std::string diagnostics;
};

/// Derivations D with g(Dx,y) + g(x,Dy) = 0: numeric kernel inside the exact Der(S)
/// span, rationalized (denominators <= 10^6) and re-verified (bracket closure,
/// certificate, skewness against g).
SkewDerivations skew_derivations(const LieAlgebra& s, const Eigen::MatrixXd& g, double rel_threshold = 1e-7);

struct MaximalCompact {
  DerivationSpace m;
  CompactCertificate certificate;
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> seed_dims;  ///< numeric dimension found from each seed
  bool seeds_agree = false;
  MetricResult metric;  ///< metric the rational basis was extracted from (gauge-fixed)
  std::string diagnostics;
};

/// Einstein metric (diagonal ansatz, gauge-fixed by the diagonal derivation torus) for
/// the first seed, then its skew derivations; further seeds use the full ansatz and must
/// give the same dimension. Throws ConvergenceError when no Einstein metric is found,
/// PreconditionError when S is not completely solvable.
MaximalCompact maximal_compact_derivations(const LieAlgebra& s, const std::vector<std::uint64_t>& seeds,
                                           const SolverParams& params = {});

/// m ⋉ S with basis (M1.., S's basis); requires a valid certificate.
LieAlgebra build_g_geq0(const LieAlgebra& s, const CompactCertificate& m);

}  // namespace iwasawa
