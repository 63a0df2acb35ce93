#include "iwasawa/derivations.hpp"

#include "iwasawa/errors.hpp"
#include "iwasawa/poly.hpp"

namespace iwasawa {

bool DerivationSpace::is_bracket_closed() const {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!contains(commutator(basis[a], basis[b]))) return false;
  return true;
}

LieAlgebra DerivationSpace::as_algebra() const {
  const std::size_t m = basis.size();
  std::vector<Rational> table(m * m * m, Rational(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto coords = matrix_coordinates(basis, commutator(basis[a], basis[b]));
      if (!coords) throw PreconditionError("derivation space is not bracket-closed");
      for (std::size_t k = 0; k < m; ++k) {
        table[(a * m + b) * m + k] = (*coords)[k];
        table[(b * m + a) * m + k] = -(*coords)[k];
      }
    }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) names.push_back("D" + std::to_string(a + 1));
  return LieAlgebra(std::move(names), std::move(table));
}

DerivationSpace derivation_algebra(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Unknown D(r,s) sits at column r*n + s. Row (i<j, k) encodes
  // (D[e_i,e_j])_k - ([D e_i, e_j])_k - ([e_i, D e_j])_k = 0.
  std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  QMatrix system(std::max<std::size_t>(pairs * n, 1), n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!is_zero(alg.c(i, j, l))) system(row, k * n + l) += alg.c(i, j, l);
          if (!is_zero(alg.c(l, j, k))) system(row, l * n + i) -= alg.c(l, j, k);
          if (!is_zero(alg.c(i, l, k))) system(row, l * n + j) -= alg.c(i, l, k);
        }
      }
  DerivationSpace out{alg, {}};
  for (const auto& v : kernel(system)) {
    QMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) d(r, s) = v[r * n + s];
    out.basis.push_back(std::move(d));
  }
  if (!out.is_bracket_closed()) throw InconsistencyError("derivation_algebra: span is not bracket-closed");
  return out;
}

std::vector<QMatrix> inner_derivations(const LieAlgebra& alg) {
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(alg.ad_basis(i));
  return out;
}

DerivationSpace diagonal_derivations(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  // (d_k - d_i - d_j) c(i,j,k) = 0
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(alg.c(i, j, k))) continue;
        QVec r(n, Rational(0));
        r[k] += 1;
        r[i] -= 1;
        r[j] -= 1;
        rows.push_back(std::move(r));
      }
  std::vector<QVec> sols;
  if (rows.empty()) {
    for (std::size_t i = 0; i < n; ++i) sols.push_back(unit_vec<Rational>(n, i));
  } else {
    sols = kernel(QMatrix::from_rows(rows, n));
  }
  DerivationSpace out{alg, {}};
  for (const auto& s : canonical_span(sols, n)) {
    QMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = s[i];
    out.basis.push_back(std::move(d));
  }
  return out;
}

namespace {

/// Basis (as matrices) of {D in der : [D, t] = 0 for every t in torus}.
std::vector<QMatrix> centralizer_in(const std::vector<QMatrix>& der, const std::vector<QMatrix>& torus) {
  if (der.empty()) return {};
  const std::size_t n = der.front().rows();
  if (torus.empty()) return der;
  // unknown coefficients x over der; sum_a x_a [D_a, t] = 0
  QMatrix system(torus.size() * n * n, der.size());
  for (std::size_t t = 0; t < torus.size(); ++t)
    for (std::size_t a = 0; a < der.size(); ++a) {
      QMatrix c = commutator(der[a], torus[t]);
      for (std::size_t e = 0; e < n * n; ++e) system(t * n * n + e, a) = c.data()[e];
    }
  std::vector<QMatrix> out;
  for (const auto& x : kernel(system)) {
    QMatrix d(n, n);
    for (std::size_t a = 0; a < der.size(); ++a)
      if (!is_zero(x[a])) d += der[a] * x[a];
    out.push_back(std::move(d));
  }
  return out;
}

bool is_split_semisimple(const QMatrix& d) {
  if (d.is_zero()) return false;
  return is_semisimple(d) && all_roots_real(characteristic_polynomial(d));
}

QMatrix trace_gram(const std::vector<QMatrix>& v) {
  QMatrix g(v.size(), v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) g(a, b) = (v[a] * v[b]).trace();
  return g;
}

/// Part of `z` trace-orthogonal to the torus (the torus' trace form is positive definite).
std::vector<QMatrix> trace_complement(const std::vector<QMatrix>& z, const std::vector<QMatrix>& torus) {
  if (z.empty()) return {};
  if (torus.empty()) return z;
  QMatrix system(torus.size(), z.size());
  for (std::size_t t = 0; t < torus.size(); ++t)
    for (std::size_t a = 0; a < z.size(); ++a) system(t, a) = (torus[t] * z[a]).trace();
  std::vector<QMatrix> out;
  const std::size_t n = z.front().rows();
  for (const auto& x : kernel(system)) {
    QMatrix d(n, n);
    for (std::size_t a = 0; a < z.size(); ++a)
      if (!is_zero(x[a])) d += z[a] * x[a];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

SplitTorus maximal_split_torus_in_der(const LieAlgebra& nilpotent, int max_steps) {
  if (!is_nilpotent(nilpotent)) throw PreconditionError("maximal_split_torus_in_der: algebra is not nilpotent");
  DerivationSpace der = derivation_algebra(nilpotent);
  SplitTorus out{diagonal_derivations(nilpotent), false, 0};
  auto& torus = out.torus.basis;
  for (int step = 0; step <= max_steps; ++step) {
    auto z = centralizer_in(der.basis, torus);
    auto rest = trace_complement(z, torus);
    if (rest.empty() || inertia(trace_gram(rest)).positive == 0) {
      out.certified_maximal = true;
      return out;
    }
    if (step == max_steps) break;
    bool grew = false;
    for (const auto& cand : rest) {
      if (is_split_semisimple(cand)) {
        torus.push_back(cand);
        grew = true;
        break;
      }
    }
    if (!grew) {
      // try pairwise sums before giving up
      for (std::size_t a = 0; a < rest.size() && !grew; ++a)
        for (std::size_t b = a + 1; b < rest.size() && !grew; ++b)
          if (is_split_semisimple(rest[a] + rest[b])) {
            torus.push_back(rest[a] + rest[b]);
            grew = true;
          }
    }
    if (!grew) break;
    ++out.extension_steps;
  }
  return out;
}

Derivation pre_einstein_derivation(const LieAlgebra& nilpotent) {
  SplitTorus split = maximal_split_torus_in_der(nilpotent);
  const auto& torus = split.torus.basis;
  const std::size_t n = nilpotent.dim();
  QVec rhs;
  for (const auto& t : torus) rhs.push_back(t.trace());
  auto x = solve(trace_gram(torus), rhs);
  if (!x) throw InconsistencyError("pre_einstein_derivation: singular trace-form system");
  QMatrix phi(n, n);
  for (std::size_t a = 0; a < torus.size(); ++a) phi += torus[a] * (*x)[a];
  DerivationSpace der = derivation_algebra(nilpotent);
  for (std::size_t a = 0; a < der.basis.size(); ++a) {
    if ((phi * der.basis[a]).trace() != der.basis[a].trace()) {
      throw InconsistencyError("pre_einstein_derivation: trace identity fails on basis derivation " +
                               std::to_string(a + 1));
    }
  }
  if (!is_semisimple(phi)) throw InconsistencyError("pre_einstein_derivation: phi is not semisimple");
  rational_eigenvalues(phi);  // throws unless the spectrum is rational
  return {phi};
}

}  // namespace iwasawa
