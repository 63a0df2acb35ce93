#include "iwasawa/catalog.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <regex>

#include "iwasawa/errors.hpp"

namespace iwasawa {
namespace {

/// N x N matrices over R (or C realified) as coordinate vectors: entry (r,s) at r*N+s,
/// its imaginary part at N*N + r*N+s.
struct Ambient {
  std::size_t size = 0;
  bool complex = false;

  std::size_t coords() const { return complex ? 2 * size * size : size * size; }

  CMatrix to_matrix(const QVec& v) const {
    CMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t s = 0; s < size; ++s) {
        Rational im = complex ? v[size * size + r * size + s] : Rational(0);
        m(r, s) = Gaussian(v[r * size + s], im);
      }
    return m;
  }

  QVec to_vec(const CMatrix& m) const {
    QVec v(coords(), Rational(0));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t s = 0; s < size; ++s) {
        v[r * size + s] = m(r, s).re();
        if (complex) v[size * size + r * size + s] = m(r, s).im();
        else if (!m(r, s).is_real()) throw InconsistencyError("catalog: complex entry in a real realization");
      }
    return v;
  }

  /// Subspace of coordinates where `keep(r, s, imaginary)` holds.
  Subspace coordinate_span(const std::function<bool(std::size_t, std::size_t, bool)>& keep) const {
    std::vector<QVec> span;
    for (std::size_t i = 0; i < coords(); ++i) {
      bool imag = i >= size * size;
      std::size_t e = i % (size * size);
      if (keep(e / size, e % size, imag)) span.push_back(unit_vec<Rational>(coords(), i));
    }
    return Subspace(coords(), span);
  }

  /// Kernel of a real-linear map on matrices whose values are flattened to rationals.
  Subspace kernel_of(const std::function<std::vector<Rational>(const CMatrix&)>& map) const {
    std::vector<QVec> cols;
    for (std::size_t i = 0; i < coords(); ++i) cols.push_back(map(to_matrix(unit_vec<Rational>(coords(), i))));
    std::size_t rows = cols.empty() ? 0 : cols.front().size();
    if (rows == 0) return Subspace::whole(coords());
    return Subspace(coords(), kernel(QMatrix::from_columns(cols, rows)));
  }
};

CMatrix adjoint(const CMatrix& m) {
  CMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
  return t;
}

std::vector<Rational> flatten(const CMatrix& m) {
  std::vector<Rational> out;
  for (const auto& x : m.data()) {
    out.push_back(x.re());
    out.push_back(x.im());
  }
  return out;
}

/// Hermitian form with q hyperbolic pairs on the outer coordinates and the identity
/// in the middle: signature (N - q, q).
CMatrix indefinite_form(std::size_t n, std::size_t q) {
  CMatrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < q || i >= n - q) j(i, n - 1 - i) = Gaussian(1);
    else j(i, i) = Gaussian(1);
  }
  return j;
}

CMatrix symplectic_form(std::size_t n2) {
  CMatrix j(n2, n2);
  for (std::size_t i = 0; i < n2; ++i) j(i, n2 - 1 - i) = Gaussian(i < n2 / 2 ? 1 : -1);
  return j;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

/// Scales to a primitive integer vector with a positive leading entry.
QVec primitive(QVec v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v)
    if (!is_zero(x)) l = lcm(l, mpz_class(x.get_den()));
  for (auto& x : v) {
    x *= l;
    if (!is_zero(x)) g = gcd(g, mpz_class(x.get_num()));
  }
  if (g == 0) return v;
  std::size_t lead = 0;
  while (is_zero(v[lead])) ++lead;
  if (sgn(v[lead]) < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

std::vector<QVec> gram_schmidt(const std::vector<QVec>& in) {
  std::vector<QVec> out;
  for (auto v : in) {
    for (const auto& u : out) {
      Rational f = dot(v, u) / dot(u, u);
      if (!is_zero(f)) v = axpy(Rational(-f), u, v);
    }
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

std::vector<QVec> units(std::size_t n, std::size_t from, std::size_t count) {
  std::vector<QVec> out;
  for (std::size_t i = from; i < from + count; ++i) out.push_back(unit_vec<Rational>(n, i));
  return out;
}

std::string label_for(const std::string& family, const std::vector<int>& p) {
  if (family == "sl") return "sl(" + std::to_string(p[0]) + ",R)";
  if (family == "sp") return "sp(" + std::to_string(p[0]) + ",R)";
  return family + "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

}  // namespace

CatalogEntry build_classical(const std::string& family, const std::vector<int>& params_in, std::size_t max_dim) {
  std::vector<int> params = params_in;
  auto bad = [&](const std::string& why) {
    return PreconditionError("build_classical(" + family + "): " + why);
  };
  Ambient amb;
  std::size_t rank = 0, expected_dim = 0;
  std::function<std::vector<Rational>(const CMatrix&)> constraint;
  if (family == "sl") {
    if (params.size() != 1 || params[0] < 2) throw bad("expected {n} with n >= 2");
    amb = {static_cast<std::size_t>(params[0]), false};
    rank = amb.size - 1;
    expected_dim = amb.size * amb.size - 1;
    constraint = [](const CMatrix& x) { return std::vector<Rational>{x.trace().re()}; };
  } else if (family == "su" || family == "so") {
    if (params.size() != 2 || params[0] < 1 || params[1] < 1) throw bad("expected {p,q} with p,q >= 1");
    if (params[0] < params[1]) std::swap(params[0], params[1]);
    const std::size_t p = params[0], q = params[1];
    const bool complex = family == "su";
    if (!complex && p + q < 3) throw bad("so(p,q) needs p + q >= 3");
    amb = {p + q, complex};
    rank = q;
    expected_dim = complex ? (p + q) * (p + q) - 1 : (p + q) * (p + q - 1) / 2;
    CMatrix j = indefinite_form(p + q, q);
    constraint = [j, complex](const CMatrix& x) {
      auto out = flatten(adjoint(x) * j + j * x);
      if (complex) {
        Gaussian t = x.trace();
        out.push_back(t.re());
        out.push_back(t.im());
      }
      return out;
    };
  } else if (family == "sp") {
    if (params.size() != 1 || params[0] < 2 || params[0] % 2) throw bad("expected {2n} with n >= 1");
    amb = {static_cast<std::size_t>(params[0]), false};
    rank = amb.size / 2;
    expected_dim = rank * (2 * rank + 1);
    CMatrix j = symplectic_form(amb.size);
    constraint = [j](const CMatrix& x) { return flatten(adjoint(x) * j + j * x); };
  } else {
    throw bad("unknown family (expected sl, su, so or sp)");
  }
  if (expected_dim > max_dim)
    throw bad("dim g = " + std::to_string(expected_dim) + " exceeds the bound " + std::to_string(max_dim));

  Subspace g_amb = amb.kernel_of(constraint);
  Subspace k_amb = g_amb.intersect(amb.kernel_of([](const CMatrix& x) { return flatten(x + adjoint(x)); }));
  Subspace a_amb = g_amb.intersect(amb.coordinate_span([](std::size_t r, std::size_t s, bool im) { return r == s && !im; }));
  Subspace n_amb = g_amb.intersect(amb.coordinate_span([](std::size_t r, std::size_t s, bool) { return r < s; }));
  if (g_amb.dim() != expected_dim || a_amb.dim() != rank || k_amb.dim() + a_amb.dim() + n_amb.dim() != expected_dim)
    throw InconsistencyError("build_classical: unexpected dimensions for " + label_for(family, params));

  // a orthogonal for Re tr(X Y*), n orthogonal inside each a-weight space.
  std::vector<QVec> a_basis = gram_schmidt(a_amb.basis());
  auto weight_of = [&](std::size_t r, std::size_t s) {
    QVec w;
    for (const auto& h : a_basis) w.push_back(h[r * amb.size + r] - h[s * amb.size + s]);
    return w;
  };
  std::map<QVec, std::vector<QVec>, std::greater<>> by_weight;
  {
    std::map<QVec, bool, std::greater<>> weights;
    for (std::size_t r = 0; r < amb.size; ++r)
      for (std::size_t s = r + 1; s < amb.size; ++s) weights[weight_of(r, s)] = true;
    for (const auto& [w, unused] : weights) {
      Subspace coords = amb.coordinate_span([&](std::size_t r, std::size_t s, bool) {
        return r < s && weight_of(r, s) == w;
      });
      auto part = n_amb.intersect(coords);
      if (part.dim()) by_weight[w] = gram_schmidt(part.basis());
    }
  }
  std::vector<QVec> basis;
  for (const auto& v : k_amb.basis()) basis.push_back(primitive(v));
  const std::size_t dk = basis.size();
  for (const auto& v : a_basis) basis.push_back(v);
  for (const auto& [w, vs] : by_weight)
    for (const auto& v : vs) basis.push_back(v);
  const std::size_t d = basis.size();
  if (d != expected_dim) throw InconsistencyError("build_classical: root spaces do not fill n");

  CatalogEntry e;
  e.family = family;
  e.params = params;
  e.label = label_for(family, params);
  e.matrix_size = amb.size;
  for (const auto& v : basis) e.realization.push_back(amb.to_matrix(v));

  std::vector<Rational> table(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = coordinates(basis, amb.to_vec(commutator(e.realization[i], e.realization[j])));
      if (!coords) throw InconsistencyError("build_classical: realization not closed under brackets");
      for (std::size_t k = 0; k < d; ++k) {
        table[(i * d + j) * d + k] = (*coords)[k];
        table[(j * d + i) * d + k] = -(*coords)[k];
      }
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    if (i < dk) names.push_back("k" + std::to_string(i + 1));
    else if (i < dk + rank) names.push_back("a" + std::to_string(i - dk + 1));
    else names.push_back("n" + std::to_string(i - dk - rank + 1));
  }
  e.g = LieAlgebra(std::move(names), std::move(table));
  e.k = Subspace(d, units(d, 0, dk));
  e.a = Subspace(d, units(d, dk, rank));
  e.n = Subspace(d, units(d, dk + rank, d - dk - rank));
  e.iwasawa = e.a + e.n;
  e.m = centralizer(e.g, e.a).intersect(e.k);
  e.expected_satake = expected_satake(e.label);
  return e;
}

CatalogEntry catalog_entry(const std::string& label, std::size_t max_dim) {
  static const std::regex split(R"((sl|sp)\((\d+),R\))");
  static const std::regex indefinite(R"((su|so)\((\d+),(\d+)\))");
  std::smatch mt;
  if (std::regex_match(label, mt, split)) return build_classical(mt[1], {std::stoi(mt[2])}, max_dim);
  if (std::regex_match(label, mt, indefinite))
    return build_classical(mt[1], {std::stoi(mt[2]), std::stoi(mt[3])}, max_dim);
  throw PreconditionError("unknown catalog label '" + label + "'");
}

std::vector<std::string> catalog_labels() {
  return {"sl(2,R)", "sl(3,R)", "su(2,1)", "su(3,1)", "so(3,1)", "so(4,1)", "sp(4,R)"};
}

LieAlgebra iwasawa_of(const CatalogEntry& entry) {
  std::vector<QVec> basis = entry.a.basis();
  for (const auto& v : entry.n.basis()) basis.push_back(v);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < entry.a.dim(); ++i) names.push_back("A" + std::to_string(i + 1));
  for (std::size_t i = 0; i < entry.n.dim(); ++i) names.push_back("N" + std::to_string(i + 1));
  return subalgebra(entry.g, basis, std::move(names));
}

LieAlgebra real_hyperbolic(std::size_t n) {
  const std::size_t d = n + 1;
  std::vector<Rational> table(d * d * d, Rational(0));
  std::vector<std::string> names{"A"};
  for (std::size_t i = 1; i < d; ++i) {
    table[(0 * d + i) * d + i] = 1;
    table[(i * d + 0) * d + i] = -1;
    names.push_back("X" + std::to_string(i));
  }
  return LieAlgebra(std::move(names), std::move(table));
}

LieAlgebra heisenberg() {
  std::vector<Rational> table(27, Rational(0));
  table[(0 * 3 + 1) * 3 + 2] = 1;
  table[(1 * 3 + 0) * 3 + 2] = -1;
  return LieAlgebra({"X", "Y", "Z"}, std::move(table));
}

SatakeDiagram expected_satake(const std::string& label) { return satake_for_label(label); }

EntryCheck check_entry(const CatalogEntry& e) {
  EntryCheck out;
  auto fail = [&](const std::string& what) {
    out.ok = false;
    out.failures.push_back(what);
  };
  const std::size_t d = e.g.dim();
  if (!validate(e.g).ok) fail("structure constants violate antisymmetry or Jacobi");
  if (e.k.dim() + e.a.dim() + e.n.dim() != d || (e.k + e.a + e.n).dim() != d) fail("g != k + a + n");
  if (!is_abelian(e.g, e.a)) fail("[a,a] != 0");
  if (!is_subalgebra(e.g, e.iwasawa)) fail("a + n is not a subalgebra");
  if (!is_subalgebra(e.g, e.k)) fail("k is not a subalgebra");

  LieAlgebra s = iwasawa_of(e);
  Subspace n_in_s(s.dim(), units(s.dim(), e.a.dim(), e.n.dim()));
  if (!(nilradical(s).space == n_in_s)) fail("n is not the nilradical of a + n");

  // m recomputed from the matrices: elements of k commuting with every matrix of a.
  {
    std::size_t dk = e.k.dim();
    QMatrix system(e.a.dim() * e.matrix_size * e.matrix_size * 2, dk);
    for (std::size_t j = 0; j < dk; ++j) {
      std::size_t row = 0;
      for (std::size_t h = 0; h < e.a.dim(); ++h) {
        auto c = flatten(commutator(e.realization[j], e.realization[dk + h]));
        for (const auto& x : c) system(row++, j) = x;
      }
    }
    std::vector<QVec> m_vecs;
    for (const auto& x : kernel(system)) {
      QVec v(d, Rational(0));
      for (std::size_t j = 0; j < dk; ++j) v[j] = x[j];
      m_vecs.push_back(v);
    }
    if (!(Subspace(d, m_vecs) == e.m)) fail("m != Z_k(a)");
  }

  Inertia in = inertia(killing_form(e.g).matrix);
  if (in.zero != 0 || in.negative != e.k.dim() || in.positive != e.a.dim() + e.n.dim())
    fail("Killing form signature differs from (dim a + dim n, dim k)");

  // theta(X) = -X* preserves g: it fixes k and maps a -> a.
  for (std::size_t i = 0; i < d; ++i) {
    CMatrix t = adjoint(e.realization[i]) * Gaussian(-1);
    if (i < e.k.dim() ? !(t == e.realization[i]) : (i < e.k.dim() + e.a.dim() && !(t == e.realization[i] * Gaussian(-1))))
      fail("Cartan involution does not act as expected on basis element " + e.g.names()[i]);
  }

  // ad_g(m) restricted to s is a derivation of s.
  std::vector<QVec> s_basis = e.iwasawa.basis();
  for (const auto& x : e.m.basis()) {
    QMatrix ad = e.g.ad(x);
    QMatrix restricted(s.dim(), s.dim());
    bool closed = true;
    for (std::size_t j = 0; j < s.dim() && closed; ++j) {
      auto img = coordinates(s_basis, ad * s_basis[j]);
      if (!img) closed = false;
      else
        for (std::size_t i = 0; i < s.dim(); ++i) restricted(i, j) = (*img)[i];
    }
    if (!closed || !is_derivation(s, restricted)) fail("ad(m) does not restrict to derivations of a + n");
  }
  return out;
}

}  // namespace iwasawa
