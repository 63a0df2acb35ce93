#pragma once

// The full pipeline: Iwasawa algebra s -> m -> g>=0 = m ⋉ s -> Cartan h = t + a ->
// complex roots -> Cartan matrix (from 1/2 B_b) -> Satake diagram -> real form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/compact.hpp"
#include "iwasawa/json_io.hpp"
#include "iwasawa/roots.hpp"
#include "iwasawa/satake.hpp"

namespace iwasawa {

struct ReconstructionConfig {
  std::vector<std::uint64_t> seeds{1, 2};
  SolverParams solver;
};

struct StageRecord {
  std::string name;
  double seconds = 0;
  std::string diagnostics;
};

struct ReconstructionReport {
  std::uint64_t input_hash = 0;
  ReconstructionConfig config;
  MaximalCompact m;
  LieAlgebra g_geq0;
  std::vector<QVec> split_torus;  ///< in g>=0 coordinates
  QVec regular;                   ///< coefficients of h0 on the split torus basis
  RestrictedRootDatum restricted;  ///< roots of a on g>=0
  CartanSubalgebra cartan;
  ComplexRootDatum complex_roots;
  CMatrix cartan_form;  ///< 2 B_b on hC, the form used for the Cartan matrix
  CartanMatrixData cartan_matrix;
  SatakeDiagram satake;
  std::optional<std::string> real_form_label;
  /// Distinct restrictions of the white simple roots are exactly the simple restricted roots.
  bool rho_simple_check = false;
  std::vector<StageRecord> stages;
};

/// Runs every stage in order; the first failure is rethrown as StageError naming the stage.
ReconstructionReport reconstruct_from_iwasawa(const LieAlgebra& s, const ReconstructionConfig& config = {});

Json report_to_json(const ReconstructionReport& r);

struct IsoWitness {
  LieAlgebra source;
  LieAlgebra target;
  QMatrix map;  ///< columns: images of the source basis in target coordinates
};

/// Exhaustive search for an isomorphism of nilpotent algebras: generator images range
/// over integer combinations with coefficients in [-bound, bound].
std::optional<IsoWitness> find_nilpotent_isomorphism(const LieAlgebra& source, const LieAlgebra& target, int bound = 2);

/// Block map (D, x) -> (phi D phi^-1, phi x) from m1 ⋉ S1 to m2 ⋉ S2, verified exactly.
/// Throws PreconditionError when phi is not an isomorphism or does not carry m1 onto m2.
IsoWitness extend_isomorphism_to_g0(const IsoWitness& phi, const DerivationSpace& m1, const DerivationSpace& m2);

struct Verdict {
  bool isomorphic_candidates = false;
  std::string invariant;  ///< first differing invariant when distinguished
  std::string detail;
  std::string text() const;
};

/// Compares the invariant tuple (dim, series dimensions, nilradical invariants, dim Der,
/// restricted root multiplicities, Satake diagram). Nilpotent inputs skip reconstruction.
Verdict compare_iwasawa(const LieAlgebra& s1, const LieAlgebra& s2, const ReconstructionConfig& config = {});

}  // namespace iwasawa
