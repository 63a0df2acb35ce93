#include "iwasawa/compact.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "iwasawa/errors.hpp"
#include "iwasawa/poly.hpp"

namespace iwasawa {
namespace {

constexpr std::int64_t kMaxDenominator = 1000000;

Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

bool elliptic(const QMatrix& d) {
  if (d.is_zero()) return true;
  return is_semisimple(d) && all_roots_imaginary(characteristic_polynomial(d));
}

/// Reduced row echelon form in floating point, pivots taken in column order.
Eigen::MatrixXd numeric_rref(Eigen::MatrixXd m, double eps) {
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index best;
    double mag = m.col(col).tail(m.rows() - row).cwiseAbs().maxCoeff(&best);
    if (mag <= eps) continue;
    best += row;
    m.row(row).swap(m.row(best));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != row && m(r, col) != 0) m.row(r) -= m(r, col) * m.row(row);
    ++row;
  }
  return m.topRows(row);
}

/// exp of the part of log(diag g) orthogonal to the diagonal derivations: the
/// representative of g's orbit under the diagonal automorphism torus.
Eigen::MatrixXd gauge_fix(const LieAlgebra& s, const Eigen::MatrixXd& g) {
  const Eigen::Index n = g.rows();
  Eigen::VectorXd logd(n);
  for (Eigen::Index i = 0; i < n; ++i) logd(i) = std::log(g(i, i));
  DerivationSpace torus = diagonal_derivations(s);
  if (torus.dim() > 0) {
    Eigen::MatrixXd t(n, static_cast<Eigen::Index>(torus.dim()));
    for (std::size_t a = 0; a < torus.dim(); ++a)
      for (Eigen::Index i = 0; i < n; ++i) t(i, static_cast<Eigen::Index>(a)) = torus.basis[a](i, i).get_d();
    Eigen::VectorXd coef = t.colPivHouseholderQr().solve(logd);
    logd -= t * coef;
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = std::exp(logd(i));
  return out;
}

}  // namespace

CompactCertificate compactness_certificate(const DerivationSpace& h) {
  CompactCertificate c;
  c.subalgebra = h;
  c.rationalized = true;
  if (!h.is_bracket_closed()) return c;
  LieAlgebra alg = h.as_algebra();
  Inertia in = inertia(killing_form(alg).matrix);
  Subspace z = center(alg);
  c.killing_negdef_on_derived = in.positive == 0 && in.zero == z.dim();
  bool ok = true;
  for (const auto& d : h.basis) ok = ok && elliptic(d);
  for (const auto& v : z.basis()) {
    if (!ok) break;
    QMatrix d(h.ambient.dim(), h.ambient.dim());
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!is_zero(v[a])) d += h.basis[a] * v[a];
    ok = elliptic(d);
  }
  c.spectra_imaginary = ok;
  return c;
}

SkewDerivations skew_derivations(const LieAlgebra& s, const Eigen::MatrixXd& g, double rel_threshold) {
  const Eigen::Index n = static_cast<Eigen::Index>(s.dim());
  SkewDerivations out;
  out.space.ambient = s;
  DerivationSpace der = derivation_algebra(s);
  const Eigen::Index k = static_cast<Eigen::Index>(der.dim());
  if (k == 0) {
    out.rationalized = true;
    return out;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw PreconditionError("skew_derivations: metric is not positive definite");
  Eigen::MatrixXd frame = llt.matrixL().transpose();
  Eigen::MatrixXd inv = frame.inverse();

  std::vector<Eigen::MatrixXd> ortho;
  Eigen::MatrixXd system(n * n, k);
  Eigen::VectorXd scale(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    Eigen::MatrixXd m = frame * to_eigen(der.basis[static_cast<std::size_t>(a)]) * inv;
    scale(a) = m.norm();
    Eigen::MatrixXd sym = (m + m.transpose()) / scale(a);
    system.col(a) = Eigen::Map<Eigen::VectorXd>(sym.data(), n * n);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_threshold * std::max(top, 1e-300)) ++rank;
  if (top == 0) rank = 0;
  Eigen::MatrixXd null = svd.matrixV().rightCols(k - rank);
  for (Eigen::Index a = 0; a < k; ++a) null.row(a) /= scale(a);
  out.numeric_dim = static_cast<std::size_t>(null.cols());
  for (Eigen::Index j = 0; j < null.cols(); ++j) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index a = 0; a < k; ++a) d += null(a, j) * to_eigen(der.basis[static_cast<std::size_t>(a)]);
    out.numeric.push_back(d);
  }
  if (out.numeric_dim == 0) {
    out.rationalized = true;
    return out;
  }

  Eigen::MatrixXd reduced = numeric_rref(null.transpose(), 1e-9);
  std::vector<QMatrix> basis;
  for (Eigen::Index r = 0; r < reduced.rows(); ++r) {
    QMatrix d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (Eigen::Index a = 0; a < k; ++a) {
      double x = reduced(r, a);
      auto q = rationalize(x, kMaxDenominator, 1e-6 * std::max(1.0, std::abs(x)));
      if (!q) {
        std::ostringstream os;
        os << "coefficient " << x << " has no rational approximation with denominator <= " << kMaxDenominator;
        out.diagnostics = os.str();
        return out;
      }
      if (!is_zero(*q)) d += der.basis[static_cast<std::size_t>(a)] * *q;
    }
    basis.push_back(std::move(d));
  }
  DerivationSpace candidate{s, basis};
  if (!candidate.is_bracket_closed()) {
    out.diagnostics = "rationalized span is not closed under brackets";
    return out;
  }
  double worst = 0;
  for (const auto& d : basis) {
    Eigen::MatrixXd m = frame * to_eigen(d) * inv;
    worst = std::max(worst, (m + m.transpose()).norm() / std::max(m.norm(), 1e-300));
  }
  out.skew_residual = worst;
  if (worst > 1e-6) {
    out.diagnostics = "rationalized basis is not skew for the metric (relative residual " + std::to_string(worst) + ")";
    return out;
  }
  if (!compactness_certificate(candidate).valid()) {
    out.diagnostics = "rationalized span fails the compactness certificate";
    return out;
  }
  out.space = candidate;
  out.rationalized = true;
  return out;
}

MaximalCompact maximal_compact_derivations(const LieAlgebra& s, const std::vector<std::uint64_t>& seeds_in,
                                           const SolverParams& params) {
  if (!is_completely_solvable(s))
    throw PreconditionError("maximal_compact_derivations: algebra is not completely solvable");
  std::vector<std::uint64_t> seeds = seeds_in.empty() ? std::vector<std::uint64_t>{1, 2} : seeds_in;
  MaximalCompact out;
  out.seeds = seeds;
  std::ostringstream diag;

  SolverParams diag_params = params;
  diag_params.ansatz = MetricAnsatz::Diagonal;
  MetricResult first = einstein_solve(s, seeds[0], diag_params);
  bool diagonal = first.converged;
  if (!diagonal) {
    diag << "diagonal ansatz did not converge (" << first.diagnostics << "); ";
    SolverParams full = params;
    full.ansatz = MetricAnsatz::Full;
    first = einstein_solve(s, seeds[0], full);
    if (!first.converged)
      throw ConvergenceError("no Einstein metric found for seed " + std::to_string(seeds[0]) + ": " + first.diagnostics);
  }
  Eigen::MatrixXd g = diagonal ? gauge_fix(s, first.metric.matrix) : first.metric.matrix;
  first.metric.matrix = g;
  first.metric.full_precision.clear();
  out.metric = first;
  SkewDerivations sk = skew_derivations(s, g);
  out.seed_dims.push_back(sk.numeric_dim);
  diag << "seed " << seeds[0] << (diagonal ? " (diagonal ansatz, torus gauge)" : " (full ansatz)")
       << ": dim " << sk.numeric_dim;
  if (!sk.diagnostics.empty()) diag << " [" << sk.diagnostics << "]";

  SolverParams full = params;
  full.ansatz = MetricAnsatz::Full;
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    MetricResult r = einstein_solve(s, seeds[i], full);
    if (!r.converged)
      throw ConvergenceError("no Einstein metric found for seed " + std::to_string(seeds[i]) + ": " + r.diagnostics);
    std::size_t dim = skew_derivations(s, r.metric.matrix).numeric_dim;
    out.seed_dims.push_back(dim);
    diag << "; seed " << seeds[i] << " (full ansatz): dim " << dim;
  }
  out.seeds_agree = true;
  for (auto d : out.seed_dims) out.seeds_agree = out.seeds_agree && d == out.seed_dims.front();

  if (sk.rationalized) {
    out.m = sk.space;
    out.certificate = compactness_certificate(sk.space);
  } else {
    out.m = DerivationSpace{s, {}};
    out.certificate.subalgebra = out.m;
    out.certificate.rationalized = false;
  }
  out.diagnostics = diag.str();
  return out;
}

LieAlgebra build_g_geq0(const LieAlgebra& s, const CompactCertificate& m) {
  if (!m.valid()) throw PreconditionError("build_g_geq0: m has no valid compactness certificate");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.subalgebra.dim(); ++i) names.push_back("M" + std::to_string(i + 1));
  return semidirect_product(m.subalgebra.basis, s, names);
}

}  // namespace iwasawa
