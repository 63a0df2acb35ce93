#include "iwasawa/einstein.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "iwasawa/derivations.hpp"
#include "iwasawa/errors.hpp"

namespace iwasawa {
namespace {

using HighFloat = boost::multiprecision::mpfr_float;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Structure constants c(a,b,k) in a dense cube.
template <class S>
struct Cube {
  int n = 0;
  std::vector<S> v;
  explicit Cube(int dim) : n(dim), v(static_cast<std::size_t>(dim) * dim * dim, S(0)) {}
  S& operator()(int a, int b, int k) { return v[(static_cast<std::size_t>(a) * n + b) * n + k]; }
  const S& operator()(int a, int b, int k) const { return v[(static_cast<std::size_t>(a) * n + b) * n + k]; }
};

template <class S>
Cube<S> cube_of(const LieAlgebra& alg) {
  const int n = static_cast<int>(alg.dim());
  Cube<S> c(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const auto& q = alg.c(a, b, k);
        if (sgn(q) != 0) c(a, b, k) = S(q.get_num().get_str()) / S(q.get_den().get_str());
      }
  return c;
}

template <>
Cube<double> cube_of<double>(const LieAlgebra& alg) {
  const int n = static_cast<int>(alg.dim());
  Cube<double> c(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) c(a, b, k) = alg.c(a, b, k).get_d();
  return c;
}

/// Constants of the frame f_a = frame^{-1} e_a, which is orthonormal for frame^T frame.
template <class S>
Cube<S> frame_constants(const Cube<S>& c, const Mat<S>& frame) {
  const int n = c.n;
  Mat<S> inv = frame.fullPivLu().inverse();
  // t(a, j, k) = sum_i inv(i,a) c(i,j,k)
  Cube<S> t(n), u(n), out(n);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      if (inv(i, a) == S(0)) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) t(a, j, k) += inv(i, a) * c(i, j, k);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int j = 0; j < n; ++j) {
        if (inv(j, b) == S(0)) continue;
        for (int k = 0; k < n; ++k) u(a, b, k) += inv(j, b) * t(a, j, k);
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m) {
        S acc(0);
        for (int k = 0; k < n; ++k) acc += frame(m, k) * u(a, b, k);
        out(a, b, m) = acc;
      }
  return out;
}

/// Polarized left-invariant Ricci formula in an orthonormal frame:
/// Ric(X,X) = -1/2 sum|[X,e_i]|^2 - 1/2 B(X,X) + 1/4 sum <[e_i,e_j],X>^2 - <[H,X],X>.
/// Ric(c) = ricci_bilinear(c, c); the result is symmetrized.
template <class S>
Mat<S> ricci_bilinear(const Cube<S>& c1, const Cube<S>& c2) {
  const int n = c1.n;
  Mat<S> r = Mat<S>::Zero(n, n);
  std::vector<S> h(n, S(0));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) h[k] += c1(k, i, i);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      S acc(0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          acc -= S(0.5) * c1(a, i, k) * c2(b, i, k);
          acc -= S(0.5) * c1(a, i, k) * c2(b, k, i);
          acc += S(0.25) * c1(i, k, a) * c2(i, k, b);
        }
      for (int k = 0; k < n; ++k) acc -= S(0.5) * h[k] * (c2(k, a, b) + c2(k, b, a));
      r(a, b) = acc;
    }
  return (r + r.transpose()) * S(0.5);
}

template <class S>
struct Evaluation {
  Mat<S> ric;   // orthonormal frame
  S scal;
  S raw;        // |Ric0|^2
  S value;      // raw / scal^2
};

template <class S>
Evaluation<S> evaluate(const Cube<S>& c, const Mat<S>& frame) {
  const int n = c.n;
  Cube<S> cf = frame_constants(c, frame);
  Evaluation<S> e;
  e.ric = ricci_bilinear(cf, cf);
  e.scal = e.ric.trace();
  Mat<S> r0 = e.ric - Mat<S>::Identity(n, n) * (e.scal / S(n));
  e.raw = r0.squaredNorm();
  e.value = e.scal == S(0) ? S(0) : e.raw / (e.scal * e.scal);
  return e;
}

template <class S>
Mat<S> gradient(const Cube<S>& c, const Mat<S>& frame) {
  const int n = c.n;
  Cube<S> cf = frame_constants(c, frame);
  Mat<S> ric = ricci_bilinear(cf, cf);
  S scal = ric.trace();
  Mat<S> r0 = ric - Mat<S>::Identity(n, n) * (scal / S(n));
  S raw = r0.squaredNorm();
  Mat<S> g = Mat<S>::Zero(n, n);
  if (scal == S(0)) return g;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      // variation of the frame constants for E = e_k e_l^T
      Cube<S> d(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d(a, b, k) += cf(a, b, l);
      for (int b = 0; b < n; ++b)
        for (int m = 0; m < n; ++m) d(l, b, m) -= cf(k, b, m);
      for (int a = 0; a < n; ++a)
        for (int m = 0; m < n; ++m) d(a, l, m) -= cf(a, k, m);
      Mat<S> dric = ricci_bilinear(cf, d) + ricci_bilinear(d, cf);
      S draw = S(2) * (r0.cwiseProduct(dric)).sum();
      S dscal = dric.trace();
      g(k, l) = draw / (scal * scal) - S(2) * raw * dscal / (scal * scal * scal);
    }
  return g;
}

template <class S>
S abs_det(const Mat<S>& m) {
  S d = m.fullPivLu().determinant();
  return d < S(0) ? S(-d) : d;
}

template <class S>
void normalize_det(Mat<S>& frame) {
  using std::pow;
  using boost::multiprecision::pow;
  const int n = static_cast<int>(frame.rows());
  S d = abs_det(frame);
  frame /= S(pow(d, S(1) / S(n)));
}

template <class S>
Mat<S> project(const Mat<S>& g, MetricAnsatz ansatz) {
  const int n = static_cast<int>(g.rows());
  Mat<S> p = g;
  if (ansatz == MetricAnsatz::Diagonal) p = Mat<S>(g.diagonal().asDiagonal());
  S tr = p.trace() / S(n);
  p -= Mat<S>::Identity(n, n) * tr;
  return p;
}

template <class S>
double residual_of(const Mat<S>& ric) {
  const int n = static_cast<int>(ric.rows());
  Eigen::MatrixXd r0(n, n);
  S scal = ric.trace();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r0(i, j) = static_cast<double>(ric(i, j) - (i == j ? scal / S(n) : S(0)));
  if (n == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

template <class S>
struct DescentOutcome {
  Mat<S> frame;
  int iterations = 0;
  double residual = 0;
  bool reached = false;
};

template <class S>
DescentOutcome<S> descend(const Cube<S>& c, Mat<S> frame, MetricAnsatz ansatz, double tol, int max_iters) {
  normalize_det(frame);
  const int n = c.n;
  DescentOutcome<S> out;
  S step(0.1);
  Mat<S> prev_g;
  Mat<S> prev_s;
  for (int it = 0; it <= max_iters; ++it) {
    auto e = evaluate(c, frame);
    out.residual = residual_of(e.ric);
    out.iterations = it;
    if (out.residual <= tol && e.scal < S(0)) {
      out.reached = true;
      break;
    }
    if (it == max_iters) break;
    Mat<S> g = project(gradient(c, frame), ansatz);
    S gg = g.squaredNorm();
    if (gg == S(0)) break;
    if (prev_g.size() != 0) {
      Mat<S> y = g - prev_g;
      S sy = (prev_s.cwiseProduct(y)).sum();
      if (sy > S(0)) step = prev_s.squaredNorm() / sy;
      else step *= S(2);
    }
    Mat<S> next;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      next = (Mat<S>::Identity(n, n) - g * step) * frame;
      if (abs_det(next) > S(0)) {
        normalize_det(next);
        auto en = evaluate(c, next);
        if (en.value <= e.value - S(1e-4) * step * gg) {
          accepted = true;
          break;
        }
      }
      step *= S(0.5);
    }
    if (!accepted) break;
    prev_s = -g * step;
    prev_g = g;
    frame = next;
  }
  out.frame = frame;
  return out;
}

std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

/// Uniform in [-1, 1) from the raw 64-bit stream (portable, unlike std distributions).
double uniform(std::mt19937_64& rng) {
  return static_cast<double>(next_u64(rng) >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
}

Eigen::MatrixXd random_frame(int n, std::uint64_t seed, MetricAnsatz ansatz) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double u = uniform(rng);
      if (i == j) l(i, j) = std::exp(0.5 * u);
      else if (ansatz == MetricAnsatz::Full) l(i, j) = 0.5 * u;
    }
  return l;
}

Eigen::MatrixXd frame_of(const Eigen::MatrixXd& g) {
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success || (g - g.transpose()).norm() > 1e-12 * (1 + g.norm()))
    throw PreconditionError("metric is not symmetric positive-definite");
  return llt.matrixL().transpose();  // g = L^T L with L upper triangular
}

Eigen::MatrixXd ricci_orthonormal(const LieAlgebra& alg, const Eigen::MatrixXd& frame) {
  auto c = cube_of<double>(alg);
  return ricci_bilinear(frame_constants(c, frame), frame_constants(c, frame));
}

struct PrecisionGuard {
  explicit PrecisionGuard(unsigned digits10) : saved(HighFloat::default_precision()) {
    HighFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { HighFloat::default_precision(saved); }
  unsigned saved;
};

bool is_abelian_table(const LieAlgebra& alg) {
  for (const auto& x : alg.table())
    if (sgn(x) != 0) return false;
  return true;
}

double normalization_factor(const LieAlgebra& alg, const Eigen::MatrixXd& g, std::string& note) {
  if (!is_solvable(alg)) {
    note = "unit determinant";
    return 1.0;
  }
  Subspace n = nilradical(alg).space;
  auto comp = n.complement_basis();
  if (comp.empty()) {
    note = "unit determinant (nilpotent input)";
    return 1.0;
  }
  // |A mod n|^2 = g(A,A) - g(A,N) g(N,N)^{-1} g(N,A)
  const int dim = static_cast<int>(alg.dim());
  Eigen::VectorXd a(dim);
  for (int i = 0; i < dim; ++i) a(i) = comp.front()[i].get_d();
  Eigen::MatrixXd nb(dim, static_cast<int>(n.dim()));
  for (int j = 0; j < static_cast<int>(n.dim()); ++j)
    for (int i = 0; i < dim; ++i) nb(i, j) = n.basis()[j][i].get_d();
  double aa = a.dot(g * a);
  if (n.dim() > 0) {
    Eigen::VectorXd gna = nb.transpose() * g * a;
    Eigen::MatrixXd gnn = nb.transpose() * g * nb;
    aa -= gna.dot(gnn.ldlt().solve(gna));
  }
  std::size_t idx = 0;
  while (idx < comp.front().size() && sgn(comp.front()[idx]) == 0) ++idx;
  note = "unit determinant; normalized constant scales the metric so that |" + alg.names()[idx] +
         " mod nilradical| = 1";
  return aa;
}

MetricResult finish(const LieAlgebra& alg, const Eigen::MatrixXd& frame, int iterations, double tol) {
  MetricResult r;
  const int n = static_cast<int>(alg.dim());
  r.metric.matrix = frame.transpose() * frame;
  r.metric.precision_bits = 53;
  Eigen::MatrixXd ric = ricci_orthonormal(alg, frame);
  double scal = ric.trace();
  r.einstein_constant = n ? scal / n : 0.0;
  r.residual = residual_of<double>(ric);
  r.iterations = iterations;
  r.converged = r.residual <= tol && (r.einstein_constant < 0 || is_abelian_table(alg));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ric, Eigen::EigenvaluesOnly);
  for (int i = 0; i < n; ++i) r.ricci_spectrum.push_back(es.eigenvalues()(i));
  std::sort(r.ricci_spectrum.begin(), r.ricci_spectrum.end());
  std::string note;
  double factor = normalization_factor(alg, r.metric.matrix, note);
  r.normalized_einstein_constant = r.einstein_constant * factor;
  r.normalization = note;
  return r;
}

}  // namespace

Eigen::MatrixXd ricci(const LieAlgebra& alg, const Eigen::MatrixXd& g) {
  Eigen::MatrixXd frame = frame_of(g);
  return frame.transpose() * ricci_orthonormal(alg, frame) * frame;
}

double scalar_curvature(const LieAlgebra& alg, const Eigen::MatrixXd& g) {
  return ricci_orthonormal(alg, frame_of(g)).trace();
}

EinsteinCheck verify_einstein(const LieAlgebra& alg, const Eigen::MatrixXd& g, double tol) {
  EinsteinCheck c;
  c.residual = residual_of<double>(ricci_orthonormal(alg, frame_of(g)));
  c.ok = c.residual <= tol;
  return c;
}

double einstein_functional(const LieAlgebra& alg, const Eigen::MatrixXd& frame) {
  return evaluate(cube_of<double>(alg), frame).value;
}

Eigen::MatrixXd einstein_gradient(const LieAlgebra& alg, const Eigen::MatrixXd& frame) {
  return gradient(cube_of<double>(alg), frame);
}

MetricResult einstein_solve(const LieAlgebra& alg, std::uint64_t seed, const SolverParams& params) {
  if (params.tol <= 0) throw PreconditionError("einstein_solve: tolerance must be positive");
  if (!is_completely_solvable(alg))
    throw PreconditionError("einstein_solve: algebra is not completely solvable");
  const int n = static_cast<int>(alg.dim());
  Eigen::MatrixXd start = random_frame(n, seed, params.ansatz);
  if (is_abelian_table(alg)) {
    normalize_det(start);
    auto r = finish(alg, start, 0, params.tol);
    r.diagnostics = "abelian: every metric is flat";
    return r;
  }
  auto c = cube_of<double>(alg);
  auto low = descend(c, start, params.ansatz, params.tol, params.max_iters);
  MetricResult r = finish(alg, low.frame, low.iterations, params.tol);
  std::ostringstream diag;
  diag << "double descent: " << low.iterations << " iterations, residual " << low.residual;
  if (params.precision_bits > 64 && r.converged && params.polish_iters > 0) {
    unsigned digits10 = static_cast<unsigned>(std::ceil(params.precision_bits * 0.30103));
    PrecisionGuard guard(digits10);
    auto ch = cube_of<HighFloat>(alg);
    Mat<HighFloat> f(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f(i, j) = HighFloat(low.frame(i, j));
    double target = std::pow(10.0, -0.4 * digits10);
    auto high = descend(ch, f, params.ansatz, target, params.polish_iters);
    Eigen::MatrixXd fd(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) fd(i, j) = static_cast<double>(high.frame(i, j));
    int total = low.iterations + high.iterations;
    r = finish(alg, fd, total, params.tol);
    Mat<HighFloat> gh = high.frame.transpose() * high.frame;
    r.metric.precision_bits = params.precision_bits;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.metric.full_precision.push_back(gh(i, j).str(digits10));
    r.residual = std::min(r.residual, high.residual);
    r.converged = r.residual <= params.tol && r.einstein_constant < 0;
    diag << "; " << params.precision_bits << "-bit polish: " << high.iterations << " iterations, residual "
         << high.residual;
  }
  if (!r.converged) diag << "; not converged within max_iters=" << params.max_iters;
  r.diagnostics = diag.str();
  return r;
}

NilsolitonResult nilsoliton_solve(const LieAlgebra& nilpotent, std::uint64_t seed, const SolverParams& params) {
  if (!is_nilpotent(nilpotent)) throw PreconditionError("nilsoliton_solve: algebra is not nilpotent");
  const int n = static_cast<int>(nilpotent.dim());
  Derivation phi = pre_einstein_derivation(nilpotent);
  LieAlgebra extension = semidirect_product({phi.matrix}, nilpotent, {"phi"});
  MetricResult ext = einstein_solve(extension, seed, params);
  NilsolitonResult out;
  Eigen::MatrixXd g = ext.metric.matrix.block(1, 1, n, n);
  Eigen::MatrixXd frame = frame_of(g);
  Eigen::MatrixXd ric = ricci_orthonormal(nilpotent, frame);
  double scal = ric.trace();
  double c = std::abs(scal) < 1e-14 ? 0.0 : (ric * ric).trace() / scal;
  Eigen::MatrixXd d = ric - c * Eigen::MatrixXd::Identity(n, n);
  if (c == 0.0) d.setZero();
  auto cf = frame_constants(cube_of<double>(nilpotent), frame);
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        double lhs = 0, rhs = 0;
        for (int m = 0; m < n; ++m) {
          lhs += d(k, m) * cf(a, b, m);
          rhs += d(m, a) * cf(m, b, k) + d(m, b) * cf(a, m, k);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  out.leibniz_residual = worst;
  out.soliton_constant = c;
  out.derivation = frame.inverse() * d * frame;
  out.metric = finish(nilpotent, frame / std::pow(std::abs(frame.determinant()), 1.0 / n), ext.iterations,
                      params.tol);
  out.metric.einstein_constant = c;
  out.metric.converged = ext.converged && worst <= std::max(params.tol, 1e-8) * 100;
  out.metric.diagnostics = "via Einstein extension R(phi) ⋉ N: " + ext.diagnostics;
  return out;
}

std::vector<std::string> format_metric(const InnerProduct& g) {
  if (!g.full_precision.empty()) return g.full_precision;
  std::vector<std::string> out;
  for (int i = 0; i < g.matrix.rows(); ++i)
    for (int j = 0; j < g.matrix.cols(); ++j) {
      std::ostringstream os;
      os.precision(17);
      os << g.matrix(i, j);
      out.push_back(os.str());
    }
  return out;
}

}  // namespace iwasawa
