#include "iwasawa/lie_algebra.hpp"

#include <sstream>

#include "iwasawa/errors.hpp"
#include "iwasawa/poly.hpp"

namespace iwasawa {

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<Rational> structure)
    : names_(std::move(names)), table_(std::move(structure)) {
  const std::size_t n = names_.size();
  if (table_.size() != n * n * n) {
    throw FormatError("structure table has " + std::to_string(table_.size()) +
                      " entries, expected dim^3 = " + std::to_string(n * n * n));
  }
  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a(k, j) = c(i, j, k);
    ad_.push_back(std::move(a));
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(names), std::vector<Rational>(dim * dim * dim, Rational(0)));
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw PreconditionError("bracket: vector length does not match algebra dimension");
  }
  return ad(x) * y;
}

QMatrix LieAlgebra::ad(const QVec& x) const {
  if (x.size() != dim()) throw PreconditionError("ad: vector length does not match dimension");
  QMatrix a(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!is_zero(x[i])) a += ad_[i] * x[i];
  return a;
}

std::size_t LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

LieAlgebra LieAlgebra::scaled(const Rational& t) const {
  std::vector<Rational> table = table_;
  for (auto& x : table) x *= t;
  return LieAlgebra(names_, std::move(table));
}

std::uint64_t LieAlgebra::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& n : names_) feed(n);
  for (const auto& x : table_) feed(x.get_str());
  return h;
}

ValidationReport validate(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.c(i, j, k) != -alg.c(j, i, k)) report.violations.push_back({i, j, k, "antisymmetry"});
  // Jacobi: [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]] = 0, reported as (i,j,l).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        QMatrix sum = alg.ad_basis(i) * alg.ad_basis(j) - alg.ad_basis(j) * alg.ad_basis(i);
        // [ad e_i, ad e_j] e_l must equal ad([e_i,e_j]) e_l
        QVec lhs = sum * unit_vec<Rational>(n, l);
        QVec eij(n);
        for (std::size_t k = 0; k < n; ++k) eij[k] = alg.c(i, j, k);
        QVec rhs = alg.ad(eij) * unit_vec<Rational>(n, l);
        if (lhs != rhs) report.violations.push_back({i, j, l, "jacobi"});
      }
  report.ok = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, const std::vector<QVec>& spanning)
    : ambient_(ambient_dim), basis_(canonical_span(spanning, ambient_dim)) {}

Subspace Subspace::whole(std::size_t n) {
  std::vector<QVec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec<Rational>(n, i));
  return Subspace(n, b);
}

bool Subspace::contains(const QVec& v) const {
  if (is_zero_vec(v)) return true;
  auto rows = basis_;
  rows.push_back(v);
  return rank(QMatrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  auto rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, rows);
}

QMatrix Subspace::annihilator() const {
  if (basis_.empty()) return QMatrix::identity(ambient_);
  auto ker = kernel(QMatrix::from_rows(basis_, ambient_));
  if (ker.empty()) return QMatrix(0, ambient_);
  return QMatrix::from_rows(ker, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // v in both iff annihilator rows of both kill v.
  auto a = annihilator();
  auto b = other.annihilator();
  QMatrix stacked(a.rows() + b.rows(), ambient_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked(a.rows() + i, j) = b(i, j);
  if (stacked.rows() == 0) return Subspace::whole(ambient_);
  return Subspace(ambient_, kernel(stacked));
}

std::vector<QVec> Subspace::complement_basis() const {
  std::vector<bool> pivot(ambient_, false);
  for (const auto& row : basis_)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_zero(row[j])) {
        pivot[j] = true;
        break;
      }
  std::vector<QVec> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!pivot[j]) out.push_back(unit_vec<Rational>(ambient_, j));
  return out;
}

Rational SymmetricForm::operator()(const QVec& x, const QVec& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * matrix(i, j) * y[j];
  return s;
}

Inertia inertia(const QMatrix& symmetric) {
  // A real symmetric matrix has a real-rooted characteristic polynomial, so
  // Descartes' rule of signs is exact.
  QPoly p = characteristic_polynomial(symmetric);
  auto variations = [](const std::vector<Rational>& c) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& x : c) {
      int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  std::vector<Rational> c = p.coeffs();
  Inertia in;
  std::size_t k = 0;
  while (k < c.size() && is_zero(c[k])) ++k;
  in.zero = k;
  in.positive = variations(c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  in.negative = variations(c);
  return in;
}

Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  std::vector<QVec> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      auto z = alg.bracket(x, y);
      if (!is_zero_vec(z)) out.push_back(std::move(z));
    }
  return Subspace(alg.dim(), out);
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  return s.contains(bracket_span(alg, s, s));
}

bool is_ideal(const LieAlgebra& alg, const Subspace& s) {
  return s.contains(bracket_span(alg, Subspace::whole(alg.dim()), s));
}

bool is_abelian(const LieAlgebra& alg, const Subspace& s) {
  return bracket_span(alg, s, s).dim() == 0;
}

SymmetricForm killing_form(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  QMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      b(i, j) = (alg.ad_basis(i) * alg.ad_basis(j)).trace();
      b(j, i) = b(i, j);
    }
  return {b};
}

QMatrix restricted_trace_form(const LieAlgebra& alg, const std::vector<QVec>& acting,
                              const Subspace& invariant) {
  // Matrix of ad x restricted to `invariant`, in its canonical basis.
  const auto& basis = invariant.basis();
  std::vector<QMatrix> restricted;
  for (const auto& x : acting) {
    QMatrix r(basis.size(), basis.size());
    QMatrix adx = alg.ad(x);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto coords = coordinates(basis, adx * basis[j]);
      if (!coords) throw PreconditionError("restricted_trace_form: subspace is not invariant");
      for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*coords)[i];
    }
    restricted.push_back(std::move(r));
  }
  QMatrix form(acting.size(), acting.size());
  for (std::size_t i = 0; i < acting.size(); ++i)
    for (std::size_t j = 0; j < acting.size(); ++j) form(i, j) = (restricted[i] * restricted[j]).trace();
  return form;
}

std::vector<Subspace> derived_series(const LieAlgebra& alg) {
  std::vector<Subspace> series{Subspace::whole(alg.dim())};
  while (true) {
    Subspace next = bracket_span(alg, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& alg) {
  const Subspace whole = Subspace::whole(alg.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(alg, whole, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& alg) { return derived_series(alg).back().dim() == 0; }
bool is_nilpotent(const LieAlgebra& alg) { return lower_central_series(alg).back().dim() == 0; }

bool is_completely_solvable(const LieAlgebra& alg) {
  if (!is_solvable(alg)) return false;
  // Weights are linear, so real spectra on a basis suffice.
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (!all_roots_real(characteristic_polynomial(alg.ad_basis(i)))) return false;
  return true;
}

Nilradical nilradical(const LieAlgebra& alg) {
  if (!is_solvable(alg)) throw PreconditionError("nilradical: algebra is not solvable");
  const std::size_t n = alg.dim();
  const auto b = killing_form(alg).matrix;
  Subspace candidate(n, kernel(b));
  Nilradical out{candidate, {}};
  auto& cert = out.certificate;
  cert.ideal = is_ideal(alg, candidate);
  cert.contains_derived = candidate.contains(derived_series(alg).size() > 1 ? derived_series(alg)[1]
                                                                             : Subspace::zero(n));
  cert.nilpotent = true;
  for (const auto& v : candidate.basis()) cert.nilpotent = cert.nilpotent && iwasawa::is_nilpotent(alg.ad(v));
  if (!cert.ideal || !cert.contains_derived || !cert.nilpotent) {
    std::string failed = !cert.ideal ? "ideal" : !cert.contains_derived ? "contains [L,L]" : "nilpotent";
    throw UnsupportedInputError("nilradical: Killing-radical candidate failed the '" + failed +
                                "' check; input is outside the supported class");
  }
  cert.quotient_semisimple = true;
  for (const auto& v : candidate.complement_basis())
    cert.quotient_semisimple = cert.quotient_semisimple && is_semisimple(alg.ad(v));
  return out;
}

Subspace centralizer(const LieAlgebra& alg, const Subspace& s) {
  const std::size_t n = alg.dim();
  if (s.dim() == 0) return Subspace::whole(n);
  QMatrix stacked(n * s.dim(), n);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    QMatrix ads = alg.ad(s.basis()[b]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = ads(i, j);
  }
  return Subspace(n, kernel(stacked));
}

Subspace normalizer(const LieAlgebra& alg, const Subspace& s) {
  const std::size_t n = alg.dim();
  QMatrix ann = s.annihilator();
  if (ann.rows() == 0 || s.dim() == 0) return Subspace::whole(n);
  QMatrix stacked(ann.rows() * s.dim(), n);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    QMatrix m = ann * alg.ad(s.basis()[b]);  // x -> ann [s_b, x]
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * ann.rows() + i, j) = m(i, j);
  }
  return Subspace(n, kernel(stacked));
}

Subspace center(const LieAlgebra& alg) { return centralizer(alg, Subspace::whole(alg.dim())); }

LieAlgebra subalgebra(const LieAlgebra& alg, const std::vector<QVec>& basis,
                      std::vector<std::string> names) {
  const std::size_t m = basis.size();
  if (names.empty())
    for (std::size_t i = 0; i < m; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<Rational> table(m * m * m, Rational(0));
  QMatrix cols = QMatrix::from_columns(basis, alg.dim());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto coords = solve(cols, alg.bracket(basis[i], basis[j]));
      if (!coords) throw PreconditionError("subalgebra: span is not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k) {
        table[(i * m + j) * m + k] = (*coords)[k];
        table[(j * m + i) * m + k] = -(*coords)[k];
      }
    }
  return LieAlgebra(std::move(names), std::move(table));
}

bool is_derivation(const LieAlgebra& alg, const QMatrix& d) {
  const std::size_t n = alg.dim();
  if (d.rows() != n || d.cols() != n) throw PreconditionError("is_derivation: shape mismatch");
  // D ad(e_i) - ad(e_i) D = ad(D e_i) for every i.
  for (std::size_t i = 0; i < n; ++i) {
    if (commutator(d, alg.ad_basis(i)) != alg.ad(d.column(i))) return false;
  }
  return true;
}

std::optional<QVec> matrix_coordinates(const std::vector<QMatrix>& basis, const QMatrix& m) {
  std::vector<QVec> flat;
  for (const auto& b : basis) flat.push_back(b.data());
  return coordinates(flat, m.data());
}

LieAlgebra semidirect_product(const std::vector<QMatrix>& derivations, const LieAlgebra& alg,
                              std::vector<std::string> derivation_names) {
  const std::size_t m = derivations.size();
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < m; ++a)
    if (!is_derivation(alg, derivations[a]))
      throw PreconditionError("semidirect_product: generator " + std::to_string(a + 1) +
                              " is not a derivation");
  if (derivation_names.empty())
    for (std::size_t a = 0; a < m; ++a) derivation_names.push_back("D" + std::to_string(a + 1));
  const std::size_t total = m + n;
  std::vector<Rational> table(total * total * total, Rational(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    table[(i * total + j) * total + k] = v;
    table[(j * total + i) * total + k] = -v;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto coords = matrix_coordinates(derivations, commutator(derivations[a], derivations[b]));
      if (!coords) throw PreconditionError("semidirect_product: derivations are not bracket-closed");
      for (std::size_t k = 0; k < m; ++k) set(a, b, k, (*coords)[k]);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) set(a, m + j, m + k, derivations[a](k, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) set(m + i, m + j, m + k, alg.c(i, j, k));
  auto names = derivation_names;
  names.insert(names.end(), alg.names().begin(), alg.names().end());
  LieAlgebra out(std::move(names), std::move(table));
  if (!validate(out).ok) throw InconsistencyError("semidirect_product: result fails Jacobi");
  return out;
}

bool is_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const QMatrix& map) {
  const std::size_t n = source.dim();
  if (target.dim() != n || map.rows() != n || map.cols() != n) return false;
  if (!inverse(map)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QVec sij(n);
      for (std::size_t k = 0; k < n; ++k) sij[k] = source.c(i, j, k);
      if (map * sij != target.bracket(map.column(i), map.column(j))) return false;
    }
  return true;
}

}  // namespace iwasawa
