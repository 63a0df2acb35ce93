#include "iwasawa/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "iwasawa/errors.hpp"
#include "iwasawa/poly.hpp"

namespace iwasawa {
namespace {

std::vector<Eigenvalue<Rational>> eigen(const QMatrix& m) { return rational_eigenvalues(m); }
std::vector<Eigenvalue<Gaussian>> eigen(const CMatrix& m) { return gaussian_eigenvalues(m); }

/// Matrix of `op` restricted to the invariant span of `basis`, in basis coordinates.
template <class F>
Matrix<F> restrict_to(const Matrix<F>& op, const std::vector<Vec<F>>& basis) {
  const std::size_t k = basis.size();
  Matrix<F> r(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = coordinates(basis, op * basis[j]);
    if (!c) throw PreconditionError("operator does not preserve the subspace");
    for (std::size_t i = 0; i < k; ++i) r(i, j) = (*c)[i];
  }
  return r;
}

template <class F>
struct Joint {
  Vec<F> weight;
  std::vector<Vec<F>> basis;
};

template <class F>
std::vector<Joint<F>> joint(const std::vector<Matrix<F>>& ops, const std::vector<Vec<F>>& on) {
  std::vector<Joint<F>> parts{{{}, on}};
  for (const auto& op : ops) {
    std::vector<Joint<F>> next;
    for (auto& part : parts) {
      if (part.basis.empty()) continue;
      Matrix<F> r = restrict_to(op, part.basis);
      if (!is_semisimple(r)) throw PreconditionError("operator is not semisimple on the subspace");
      std::size_t total = 0;
      for (const auto& ev : eigen(r)) {
        Matrix<F> shifted = r;
        for (std::size_t i = 0; i < r.rows(); ++i) shifted(i, i) -= ev.value;
        Joint<F> piece{part.weight, {}};
        piece.weight.push_back(ev.value);
        for (const auto& c : kernel(shifted)) {
          Vec<F> v(part.basis.front().size(), F(0));
          for (std::size_t i = 0; i < c.size(); ++i)
            if (!is_zero(c[i])) v = axpy(c[i], part.basis[i], v);
          piece.basis.push_back(std::move(v));
        }
        total += piece.basis.size();
        next.push_back(std::move(piece));
      }
      if (total != part.basis.size()) throw InconsistencyError("joint eigenspaces do not fill the subspace");
    }
    parts = std::move(next);
  }
  return parts;
}

bool lex_positive(const QVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return sgn(x) > 0;
  return false;
}

Rational dotq(const QVec& a, const QVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Deterministic small-integer coefficient stream.
struct SmallInts {
  std::uint64_t state = 0x2545F4914F6CDD1DULL;
  int next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 11) - 5;
  }
};

std::vector<QVec> common_kernel(const std::vector<QMatrix>& ops, std::size_t n) {
  if (ops.empty()) {
    std::vector<QVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec<Rational>(n, i));
    return all;
  }
  QMatrix stacked(ops.size() * n, n);
  for (std::size_t o = 0; o < ops.size(); ++o)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(o * n + i, j) = ops[o](i, j);
  return kernel(stacked);
}

QMatrix power(const QMatrix& m, std::size_t k) {
  QMatrix r = QMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

std::vector<JointEigenspace> joint_eigenspaces(const std::vector<QMatrix>& ops, const std::vector<QVec>& on) {
  std::vector<JointEigenspace> out;
  for (auto& p : joint(ops, on)) out.push_back({std::move(p.weight), std::move(p.basis)});
  return out;
}

Subspace split_torus_of_iwasawa(const LieAlgebra& s, const std::vector<QMatrix>& annihilators) {
  if (!is_completely_solvable(s)) throw PreconditionError("split_torus_of_iwasawa: algebra is not completely solvable");
  const std::size_t n = s.dim();
  Subspace nil = nilradical(s).space;
  const std::size_t rank = n - nil.dim();
  if (rank == 0) return Subspace::zero(n);
  Subspace allowed(n, common_kernel(annihilators, n));
  const auto& w = allowed.basis();
  SmallInts coeffs;
  for (int trial = 0; trial < 200; ++trial) {
    QVec x(n, Rational(0));
    for (std::size_t i = 0; i < w.size(); ++i) {
      int c = trial == 0 ? static_cast<int>(i) + 1 : coeffs.next();
      if (c) x = axpy(Rational(c), w[i], x);
    }
    if (is_zero_vec(x)) continue;
    Subspace fitting(n, kernel(power(s.ad(x), n)));
    if (fitting.dim() != rank || fitting.intersect(nil).dim() != 0) continue;
    if (!allowed.contains(fitting) || !is_abelian(s, fitting)) continue;
    bool ok = true;
    for (const auto& h : fitting.basis()) {
      QMatrix ad = s.ad(h);
      if (!is_semisimple(ad)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<QMatrix> ops;
    for (const auto& h : fitting.basis()) ops.push_back(s.ad(h));
    std::vector<QVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec<Rational>(n, i));
    joint_eigenspaces(ops, all);  // throws on irrational eigenvalues
    return fitting;
  }
  throw UnsupportedInputError("split_torus_of_iwasawa: no semisimple abelian complement to the nilradical found");
}

RestrictedRootDatum restricted_root_decomposition(const LieAlgebra& alg, const std::vector<QVec>& torus,
                                                  const std::optional<QVec>& order) {
  const std::size_t n = alg.dim();
  Subspace tor(n, torus);
  if (tor.dim() != torus.size()) throw PreconditionError("restricted_root_decomposition: dependent torus basis");
  if (!is_abelian(alg, tor)) throw PreconditionError("restricted_root_decomposition: torus is not abelian");
  std::vector<QMatrix> ops;
  for (const auto& h : torus) ops.push_back(alg.ad(h));
  std::vector<QVec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec<Rational>(n, i));
  RestrictedRootDatum out;
  out.torus = torus;
  out.centralizer = Subspace::zero(n);
  for (auto& part : joint_eigenspaces(ops, all)) {
    if (is_zero_vec(part.weight)) {
      out.centralizer = Subspace(n, part.basis);
      continue;
    }
    RestrictedRoot r{part.weight, Subspace(n, part.basis), false};
    if (order) {
      Rational v = dotq(*order, r.functional);
      r.positive = sgn(v) != 0 ? sgn(v) > 0 : lex_positive(r.functional);
    } else {
      r.positive = lex_positive(r.functional);
    }
    out.roots.push_back(std::move(r));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const RestrictedRoot& a, const RestrictedRoot& b) {
    if (a.positive != b.positive) return a.positive;
    return a.positive ? b.functional < a.functional : a.functional < b.functional;
  });
  return out;
}

ComplexAlgebra::ComplexAlgebra(std::vector<std::string> names, std::vector<Gaussian> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (table_.size() != n * n * n) throw FormatError("complex structure constants must have shape dim^3");
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = c(i, j, k);
    ad_.push_back(std::move(m));
  }
}

CMatrix ComplexAlgebra::ad(const CVec& x) const {
  CMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!is_zero(x[i])) m += ad_[i] * x[i];
  return m;
}

CVec ComplexAlgebra::bracket(const CVec& x, const CVec& y) const { return ad(x) * y; }

CVec ComplexAlgebra::conjugation(const CVec& x) const {
  CVec out;
  for (const auto& v : x) out.push_back(v.conj());
  return out;
}

bool ComplexAlgebra::is_valid() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k) + c(j, i, k))) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CVec bij(n);
      for (std::size_t k = 0; k < n; ++k) bij[k] = c(i, j, k);
      if (!(commutator(ad_[i], ad_[j]) == ad(bij))) return false;
    }
  return true;
}

ComplexAlgebra complexify(const LieAlgebra& alg) {
  std::vector<Gaussian> table;
  table.reserve(alg.table().size());
  for (const auto& x : alg.table()) table.emplace_back(x);
  return ComplexAlgebra(alg.names(), std::move(table));
}

CMatrix complex_trace_form(const ComplexAlgebra& alg, const std::vector<CVec>& on, const std::vector<CVec>& space) {
  std::vector<CMatrix> ops;
  for (const auto& x : on) {
    CMatrix a = alg.ad(x);
    ops.push_back(space.empty() ? a : restrict_to(a, space));
  }
  CMatrix form(on.size(), on.size());
  for (std::size_t i = 0; i < on.size(); ++i)
    for (std::size_t j = i; j < on.size(); ++j) {
      form(i, j) = (ops[i] * ops[j]).trace();
      form(j, i) = form(i, j);
    }
  return form;
}

std::vector<QVec> CartanSubalgebra::basis() const {
  std::vector<QVec> out = a;
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

CartanSubalgebra cartan_subalgebra(const LieAlgebra& g, const Subspace& m, const std::vector<QVec>& a) {
  const std::size_t n = g.dim();
  CartanSubalgebra out{a, {}};
  auto gaussian_spectrum = [&](const QVec& y) {
    try {
      gaussian_eigenvalues(complexify(g.ad(y)));
      return true;
    } catch (const UnsupportedInputError&) {
      return false;
    }
  };
  while (true) {
    // Z_m(t)
    std::vector<QVec> z;
    if (out.t.empty()) {
      z = m.basis();
    } else {
      const auto& mb = m.basis();
      QMatrix system(out.t.size() * n, mb.size());
      for (std::size_t j = 0; j < mb.size(); ++j) {
        std::size_t row = 0;
        for (const auto& t : out.t) {
          QVec b = g.bracket(mb[j], t);
          for (std::size_t k = 0; k < n; ++k) system(row++, j) = b[k];
        }
      }
      for (const auto& c : kernel(system)) {
        QVec v(n, Rational(0));
        for (std::size_t j = 0; j < mb.size(); ++j)
          if (!is_zero(c[j])) v = axpy(c[j], mb[j], v);
        z.push_back(v);
      }
    }
    Subspace tspan(n, out.t);
    std::vector<QVec> fresh;
    for (const auto& v : z)
      if (!tspan.contains(v)) fresh.push_back(v);
    if (fresh.empty()) break;
    std::optional<QVec> pick;
    for (const auto& v : fresh)
      if (gaussian_spectrum(v)) {
        pick = v;
        break;
      }
    for (std::size_t i = 0; i < fresh.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < fresh.size() && !pick; ++j) {
        QVec v = axpy(Rational(1), fresh[i], fresh[j]);
        if (gaussian_spectrum(v)) pick = v;
      }
    if (!pick) throw UnsupportedInputError("cartan_subalgebra: no torus element with Gaussian-rational spectrum");
    out.t.push_back(*pick);
  }
  if (!is_abelian(g, Subspace(n, out.basis()))) throw InconsistencyError("cartan_subalgebra: t + a is not abelian");
  return out;
}

ComplexRootDatum complex_root_decomposition(const ComplexAlgebra& gC, const std::vector<CVec>& cartan,
                                            std::size_t split_rank, const std::vector<QVec>& ordering) {
  const std::size_t n = gC.dim();
  const std::size_t r = cartan.size();
  std::vector<CMatrix> ops;
  for (const auto& h : cartan) ops.push_back(gC.ad(h));
  std::vector<CVec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec<Gaussian>(n, i));
  ComplexRootDatum out;
  out.cartan = cartan;
  out.split_rank = split_rank;
  out.ordering = ordering;
  struct Keyed {
    QVec key;
    ComplexRoot root;
  };
  std::vector<Keyed> keyed;
  for (auto& part : joint(ops, all)) {
    if (is_zero_vec(part.weight)) {
      if (part.basis.size() != r)
        throw InconsistencyError("complex_root_decomposition: centralizer of h has dim " +
                                 std::to_string(part.basis.size()) + " != " + std::to_string(r));
      continue;
    }
    if (part.basis.size() != 1)
      throw InconsistencyError("complex_root_decomposition: root space of dim " + std::to_string(part.basis.size()));
    QVec key;
    for (std::size_t i = 0; i < r; ++i) {
      const Gaussian& v = part.weight[i];
      if (i < split_rank ? !v.is_real() : !v.is_imaginary())
        throw InconsistencyError("complex_root_decomposition: root value " + to_string(v) +
                                 (i < split_rank ? " not real on a" : " not imaginary on t"));
      key.push_back(i < split_rank ? v.re() : v.im());
    }
    ComplexRoot root;
    root.functional = part.weight;
    root.vector = part.basis.front();
    root.rho = QVec(key.begin(), key.begin() + static_cast<long>(split_rank));
    bool decided = false;
    for (const auto& f : ordering) {
      Rational v = dotq(f, key);
      if (sgn(v) != 0) {
        root.positive = sgn(v) > 0;
        decided = true;
        break;
      }
    }
    if (!decided) {
      std::string text;
      for (const auto& x : part.weight) text += (text.empty() ? "" : ", ") + to_string(x);
      throw InconsistencyError("complex_root_decomposition: degenerate ordering at root (" + text + ")");
    }
    keyed.push_back({key, std::move(root)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.root.positive != b.root.positive) return a.root.positive;
    return a.root.positive ? b.key < a.key : a.key < b.key;
  });
  std::set<QVec> positive_keys;
  for (const auto& k : keyed)
    if (k.root.positive) positive_keys.insert(k.key);
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    out.roots.push_back(keyed[i].root);
    if (!keyed[i].root.positive) continue;
    bool decomposable = false;
    for (const auto& p : positive_keys) {
      QVec rest = keyed[i].key;
      for (std::size_t j = 0; j < r; ++j) rest[j] -= p[j];
      if (positive_keys.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simple.push_back(i);
  }
  return out;
}

CartanMatrixData cartan_matrix(const std::vector<CVec>& simple, const CMatrix& form) {
  auto inv = inverse(form);
  if (!inv) throw PreconditionError("cartan_matrix: form is degenerate on the Cartan subalgebra");
  auto pairing = [&](const CVec& x, const CVec& y) {
    Gaussian s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * (*inv)(i, j) * y[j];
    return s;
  };
  const std::size_t k = simple.size();
  CartanMatrixData out;
  out.matrix.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Gaussian v = Gaussian(2) * pairing(simple[i], simple[j]) / pairing(simple[j], simple[j]);
      if (!v.is_real() || v.re().get_den() != 1)
        throw InconsistencyError("cartan_matrix: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") = " + to_string(v) + " is not an integer");
      out.matrix[i][j] = static_cast<int>(v.re().get_num().get_si());
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      bool ok = i == j ? out.matrix[i][j] == 2 : (out.matrix[i][j] <= 0 && (out.matrix[i][j] == 0) == (out.matrix[j][i] == 0));
      if (!ok) throw InconsistencyError("cartan_matrix: not a Cartan matrix at (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
    }
  out.type = dynkin_type(out.matrix);
  return out;
}

std::vector<std::vector<int>> standard_cartan(const std::string& type) {
  if (type.size() < 2) throw PreconditionError("unknown Dynkin type '" + type + "'");
  const char fam = type[0];
  const int n = std::stoi(type.substr(1));
  std::vector<QVec> roots;
  auto vec = [](std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    QVec v(dim, Rational(0));
    for (const auto& [i, x] : entries) v[i] = x;
    return v;
  };
  const Rational h(1, 2);
  if (fam == 'A' && n >= 1) {
    for (int i = 0; i < n; ++i) roots.push_back(vec(n + 1, {{i, 1}, {i + 1, -1}}));
  } else if ((fam == 'B' && n >= 2) || (fam == 'C' && n >= 3) || (fam == 'D' && n >= 4)) {
    for (int i = 0; i + 1 < n; ++i) roots.push_back(vec(n, {{i, 1}, {i + 1, -1}}));
    if (fam == 'B') roots.push_back(vec(n, {{n - 1, 1}}));
    if (fam == 'C') roots.push_back(vec(n, {{n - 1, 2}}));
    if (fam == 'D') roots.push_back(vec(n, {{n - 2, 1}, {n - 1, 1}}));
  } else if (fam == 'E' && n >= 6 && n <= 8) {
    roots.push_back(vec(8, {{0, h}, {1, -h}, {2, -h}, {3, -h}, {4, -h}, {5, -h}, {6, -h}, {7, h}}));
    roots.push_back(vec(8, {{0, 1}, {1, 1}}));
    for (int i = 0; i + 2 < n; ++i) roots.push_back(vec(8, {{i + 1, 1}, {i, -1}}));
  } else if (fam == 'F' && n == 4) {
    roots.push_back(vec(4, {{1, 1}, {2, -1}}));
    roots.push_back(vec(4, {{2, 1}, {3, -1}}));
    roots.push_back(vec(4, {{3, 1}}));
    roots.push_back(vec(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
  } else if (fam == 'G' && n == 2) {
    roots.push_back(vec(3, {{0, 1}, {1, -1}}));
    roots.push_back(vec(3, {{0, -2}, {1, 1}, {2, 1}}));
  } else {
    throw PreconditionError("unknown Dynkin type '" + type + "'");
  }
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = 2 * dotq(roots[i], roots[j]) / dotq(roots[j], roots[j]);
      a[i][j] = static_cast<int>(v.get_num().get_si());
    }
  return a;
}

std::vector<std::vector<std::size_t>> bourbaki_labelings(const std::vector<std::vector<int>>& cartan,
                                                         const std::vector<std::size_t>& nodes,
                                                         const std::string& type) {
  std::vector<std::vector<int>> std_m;
  try {
    std_m = standard_cartan(type);
  } catch (const PreconditionError&) {
    return {};
  }
  const std::size_t k = nodes.size();
  if (std_m.size() != k) return {};
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> assign;
  std::vector<bool> used(k, false);
  std::function<void()> rec = [&]() {
    const std::size_t p = assign.size();
    if (p == k) {
      found.push_back(assign);
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      std::size_t node = nodes[c];
      bool ok = cartan[node][node] == std_m[p][p];
      for (std::size_t q = 0; q < p && ok; ++q)
        ok = cartan[node][assign[q]] == std_m[p][q] && cartan[assign[q]][node] == std_m[q][p];
      if (!ok) continue;
      used[c] = true;
      assign.push_back(node);
      rec();
      assign.pop_back();
      used[c] = false;
    }
  };
  rec();
  return found;
}

std::vector<DynkinComponent> dynkin_components(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::vector<bool> seen(n, false);
  std::vector<DynkinComponent> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && cartan[comp[i]][j] != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    const std::string r = std::to_string(comp.size());
    std::vector<std::string> candidates{"A" + r, "B" + r, "C" + r, "D" + r, "E" + r, "F" + r, "G" + r};
    bool classified = false;
    for (const auto& t : candidates) {
      auto labelings = bourbaki_labelings(cartan, comp, t);
      if (!labelings.empty()) {
        out.push_back({t, labelings.front()});
        classified = true;
        break;
      }
    }
    if (!classified) throw UnsupportedInputError("Cartan matrix component of rank " + r + " is not of finite type");
  }
  return out;
}

std::string dynkin_type(const std::vector<std::vector<int>>& cartan) {
  std::string out;
  for (const auto& c : dynkin_components(cartan)) out += (out.empty() ? "" : "x") + c.type;
  return out;
}

KillingRelationReport borel_killing_relation_check(const ComplexAlgebra& gC, const ComplexRootDatum& roots) {
  KillingRelationReport rep;
  std::vector<CVec> borel = roots.cartan;
  for (const auto& r : roots.roots)
    if (r.positive) borel.push_back(r.vector);
  rep.b_g = complex_trace_form(gC, roots.cartan);
  rep.b_b = complex_trace_form(gC, roots.cartan, borel);
  rep.holds = true;
  for (std::size_t i = 0; i < roots.cartan.size(); ++i)
    for (std::size_t j = 0; j < roots.cartan.size(); ++j)
      if (!(rep.b_b(i, j) * Gaussian(2) == rep.b_g(i, j))) {
        rep.holds = false;
        rep.offending.emplace_back(i, j);
      }
  return rep;
}

}  // namespace iwasawa
