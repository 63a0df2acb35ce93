#include "iwasawa/reconstruct.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "iwasawa/derivations.hpp"
#include "iwasawa/errors.hpp"

namespace iwasawa {
namespace {

template <class Fn>
auto stage(ReconstructionReport& rep, const std::string& name, Fn&& fn) -> decltype(fn()) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      rep.stages.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), ""});
    } else {
      auto out = fn();
      rep.stages.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), ""});
      return out;
    }
  } catch (const StageError&) {
    throw;
  } catch (const DomainError& e) {
    throw StageError(name, std::string(e.kind()) + ": " + e.what());
  }
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Smallest-box integer vector positive on every functional.
QVec regular_element(const std::vector<QVec>& functionals, std::size_t rank) {
  if (rank == 0) return {};
  for (int bound = 1; bound <= 12; ++bound) {
    std::vector<int> c(rank, -bound);
    while (true) {
      int top = 0;
      for (int x : c) top = std::max(top, std::abs(x));
      if (top == bound) {
        QVec v;
        for (int x : c) v.emplace_back(x);
        bool ok = true;
        for (const auto& f : functionals) ok = ok && sgn(dot(v, f)) > 0;
        if (ok) return v;
      }
      std::size_t k = 0;
      while (k < rank && ++c[k] > bound) c[k++] = -bound;
      if (k == rank) break;
    }
  }
  throw InconsistencyError("no element of a is positive on every root of s (roots not in an open half-space)");
}

std::vector<CVec> complexify_all(const std::vector<QVec>& v) {
  std::vector<CVec> out;
  for (const auto& x : v) out.push_back(complexify(x));
  return out;
}

std::string dims_of(const std::vector<Subspace>& series) {
  std::string s;
  for (const auto& x : series) s += (s.empty() ? "" : ",") + std::to_string(x.dim());
  return s;
}

Json gaussian_vec(const CVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

ReconstructionReport reconstruct_from_iwasawa(const LieAlgebra& s, const ReconstructionConfig& config) {
  ReconstructionReport rep;
  rep.input_hash = s.hash();
  rep.config = config;
  stage(rep, "validate", [&] {
    if (!validate(s).ok) throw PreconditionError("input violates antisymmetry or the Jacobi identity");
    if (!is_completely_solvable(s)) throw PreconditionError("input is not completely solvable");
    if (is_nilpotent(s)) throw PreconditionError("input is nilpotent, so it is not an Iwasawa subalgebra of a noncompact semisimple algebra");
  });
  rep.m = stage(rep, "maximal_compact", [&] {
    auto mc = maximal_compact_derivations(s, config.seeds, config.solver);
    if (!mc.certificate.valid())
      throw InconsistencyError("no certified rational maximal compact subalgebra: " + mc.diagnostics);
    if (!mc.seeds_agree) throw InconsistencyError("seeds disagree on dim m: " + mc.diagnostics);
    return mc;
  });
  rep.stages.back().diagnostics = rep.m.diagnostics;
  rep.g_geq0 = stage(rep, "build_g_geq0", [&] { return build_g_geq0(s, rep.m.certificate); });
  const std::size_t dm = rep.m.m.dim();
  const std::size_t n0 = rep.g_geq0.dim();
  auto lift = [&](const QVec& x) {
    QVec v(n0, Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) v[dm + i] = x[i];
    return v;
  };

  stage(rep, "split_torus", [&] {
    Subspace a = split_torus_of_iwasawa(s, rep.m.m.basis);
    for (const auto& x : a.basis()) rep.split_torus.push_back(lift(x));
  });
  const std::size_t rank = rep.split_torus.size();
  rep.restricted = stage(rep, "restricted_roots", [&] {
    auto probe = restricted_root_decomposition(rep.g_geq0, rep.split_torus);
    std::vector<QVec> fs;
    for (const auto& r : probe.roots) fs.push_back(r.functional);
    rep.regular = regular_element(fs, rank);
    auto datum = restricted_root_decomposition(rep.g_geq0, rep.split_torus, rep.regular);
    std::size_t total = datum.centralizer.dim();
    for (const auto& r : datum.roots) total += r.space.dim();
    if (total != n0) throw InconsistencyError("restricted root spaces do not fill g>=0");
    return datum;
  });

  rep.cartan = stage(rep, "cartan_subalgebra", [&] {
    std::vector<QVec> mvecs;
    for (std::size_t i = 0; i < dm; ++i) mvecs.push_back(unit_vec<Rational>(n0, i));
    return cartan_subalgebra(rep.g_geq0, Subspace(n0, mvecs), rep.split_torus);
  });

  ComplexAlgebra gC = complexify(rep.g_geq0);
  rep.complex_roots = stage(rep, "complex_roots", [&] {
    const std::size_t r = rep.cartan.a.size() + rep.cartan.t.size();
    std::vector<QVec> ordering;
    QVec first(r, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) first[i] = rep.regular[i];
    ordering.push_back(first);
    for (std::size_t i = 0; i < r; ++i) ordering.push_back(unit_vec<Rational>(r, i));
    auto datum = complex_root_decomposition(gC, complexify_all(rep.cartan.basis()), rank, ordering);
    for (const auto& root : datum.roots)
      if (sgn(dot(root.rho, rep.regular)) > 0 && !root.positive)
        throw InconsistencyError("ordering does not extend the positivity of restricted roots");
    return datum;
  });

  rep.cartan_matrix = stage(rep, "cartan_matrix", [&] {
    std::vector<CVec> borel = rep.complex_roots.cartan;
    for (const auto& r : rep.complex_roots.roots)
      if (r.positive) borel.push_back(r.vector);
    rep.cartan_form = complex_trace_form(gC, rep.complex_roots.cartan, borel) * Gaussian(2);
    std::vector<CVec> simple;
    for (auto i : rep.complex_roots.simple) simple.push_back(rep.complex_roots.roots[i].functional);
    return cartan_matrix(simple, rep.cartan_form);
  });

  rep.satake = stage(rep, "satake", [&] {
    std::vector<QVec> rho;
    for (auto i : rep.complex_roots.simple) rho.push_back(project_rho(rep.complex_roots.roots[i], rank));
    auto colors = color_nodes(rho);
    auto arrows = detect_arrows(rho, colors);
    // rho(Pi_1) against the simple restricted roots
    std::set<QVec> white;
    for (std::size_t i = 0; i < rho.size(); ++i)
      if (colors[i] == NodeColor::White) white.insert(rho[i]);
    std::set<QVec> positive, simple;
    for (const auto& r : rep.restricted.roots)
      if (r.positive) positive.insert(r.functional);
    for (const auto& p : positive) {
      bool decomposable = false;
      for (const auto& q : positive) {
        QVec rest = p;
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= q[k];
        decomposable = decomposable || positive.count(rest) > 0;
      }
      if (!decomposable) simple.insert(p);
    }
    rep.rho_simple_check = white == simple;
    return assemble_satake(rep.cartan_matrix, colors, arrows);
  });
  rep.real_form_label = rep.satake.real_form_label;
  return rep;
}

Json report_to_json(const ReconstructionReport& r) {
  Json j;
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << r.input_hash;
  j["input_hash"] = hash.str();
  j["config"] = {{"seeds", r.config.seeds},
                 {"tol", r.config.solver.tol},
                 {"max_iters", r.config.solver.max_iters},
                 {"precision_bits", r.config.solver.precision_bits}};
  Json m;
  m["dim"] = r.m.m.dim();
  m["basis"] = Json::array();
  for (const auto& d : r.m.m.basis) m["basis"].push_back(to_json(d));
  m["certificate"] = {{"killing_negdef_on_derived", r.m.certificate.killing_negdef_on_derived},
                      {"spectra_imaginary", r.m.certificate.spectra_imaginary},
                      {"rationalized", r.m.certificate.rationalized},
                      {"valid", r.m.certificate.valid()}};
  m["seed_dims"] = r.m.seed_dims;
  m["seeds_agree"] = r.m.seeds_agree;
  m["einstein_constant"] = r.m.metric.einstein_constant;
  m["einstein_residual"] = r.m.metric.residual;
  m["diagnostics"] = r.m.diagnostics;
  j["m"] = m;
  j["g_geq0"] = algebra_to_json(r.g_geq0);
  j["split_torus"] = Json::array();
  for (const auto& v : r.split_torus) j["split_torus"].push_back(to_json(v));
  j["regular_element"] = to_json(r.regular);
  Json rr = Json::array();
  for (const auto& root : r.restricted.roots)
    rr.push_back({{"functional", to_json(root.functional)}, {"dim", root.space.dim()}, {"positive", root.positive}});
  j["restricted_roots"] = {{"g0_dim", r.restricted.centralizer.dim()}, {"roots", rr}};
  j["cartan"] = {{"a", Json::array()}, {"t", Json::array()}};
  for (const auto& v : r.cartan.a) j["cartan"]["a"].push_back(to_json(v));
  for (const auto& v : r.cartan.t) j["cartan"]["t"].push_back(to_json(v));
  Json cr = Json::array();
  for (const auto& root : r.complex_roots.roots)
    cr.push_back({{"functional", gaussian_vec(root.functional)}, {"rho", to_json(root.rho)}, {"positive", root.positive}});
  j["complex_roots"] = {{"roots", cr}, {"simple", r.complex_roots.simple}};
  j["cartan_matrix"] = r.cartan_matrix.matrix;
  j["dynkin_type"] = r.cartan_matrix.type;
  j["satake"] = Json::parse(render(r.satake, "json"));
  j["real_form_label"] = r.real_form_label ? Json(*r.real_form_label) : Json(nullptr);
  j["rho_simple_check"] = r.rho_simple_check;
  j["stages"] = Json::array();
  for (const auto& s : r.stages) j["stages"].push_back({{"name", s.name}, {"diagnostics", s.diagnostics}});
  return j;
}

std::optional<IsoWitness> find_nilpotent_isomorphism(const LieAlgebra& src, const LieAlgebra& dst, int bound) {
  if (!is_nilpotent(src) || !is_nilpotent(dst)) throw PreconditionError("find_nilpotent_isomorphism: inputs must be nilpotent");
  const std::size_t n = src.dim();
  if (dst.dim() != n) return std::nullopt;
  if (n == 0) return IsoWitness{src, dst, QMatrix(0, 0)};
  auto derived = [](const LieAlgebra& a) { return bracket_span(a, Subspace::whole(a.dim()), Subspace::whole(a.dim())); };
  Subspace d_src = derived(src), d_dst = derived(dst);
  if (d_src.dim() != d_dst.dim()) return std::nullopt;
  std::vector<QVec> gens = d_src.complement_basis();
  // words: left-nested brackets [g_i1, [g_i2, ... g_ik]] whose values form a basis
  std::vector<std::vector<std::size_t>> words;
  std::vector<QVec> values;
  auto try_add = [&](const std::vector<std::size_t>& w, const QVec& v) {
    std::vector<QVec> probe = values;
    probe.push_back(v);
    if (Subspace(n, probe).dim() == probe.size()) {
      words.push_back(w);
      values.push_back(v);
    }
  };
  for (std::size_t i = 0; i < gens.size(); ++i) try_add({i}, gens[i]);
  for (std::size_t layer = 0; values.size() < n && layer < words.size(); ++layer) {
    auto w = words[layer];
    QVec v = values[layer];
    for (std::size_t i = 0; i < gens.size() && values.size() < n; ++i) {
      auto w2 = w;
      w2.insert(w2.begin(), i);
      try_add(w2, src.bracket(gens[i], v));
    }
  }
  if (values.size() != n) throw InconsistencyError("find_nilpotent_isomorphism: generators do not span");
  auto ws_inv = inverse(QMatrix::from_columns(values, n));
  const std::size_t count = gens.size() * n;
  for (int b = 1; b <= bound; ++b) {
    std::vector<int> c(count, -b);
    while (true) {
      bool fresh = false;
      for (int x : c) fresh = fresh || std::abs(x) == b;
      std::vector<QVec> img(gens.size(), QVec(n, Rational(0)));
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t k = 0; k < n; ++k) img[g][k] = c[g * n + k];
      bool usable = fresh;
      if (usable) {
        std::vector<QVec> span = d_dst.basis();
        for (const auto& v : img) span.push_back(v);
        usable = Subspace(n, span).dim() == n;
      }
      if (usable) {
        std::vector<QVec> target_values;
        for (const auto& w : words) {
          QVec v = img[w.back()];
          for (std::size_t k = w.size() - 1; k-- > 0;) v = dst.bracket(img[w[k]], v);
          target_values.push_back(v);
        }
        QMatrix map = QMatrix::from_columns(target_values, n) * *ws_inv;
        if (is_isomorphism(src, dst, map)) return IsoWitness{src, dst, map};
      }
      std::size_t k = 0;
      while (k < count && ++c[k] > b) c[k++] = -b;
      if (k == count) break;
    }
  }
  return std::nullopt;
}

IsoWitness extend_isomorphism_to_g0(const IsoWitness& phi, const DerivationSpace& m1, const DerivationSpace& m2) {
  if (!is_isomorphism(phi.source, phi.target, phi.map))
    throw PreconditionError("extend_isomorphism_to_g0: phi is not an isomorphism");
  auto inv = inverse(phi.map);
  const std::size_t dm = m1.dim();
  if (m2.dim() != dm) throw PreconditionError("extend_isomorphism_to_g0: dim m1 != dim m2");
  const std::size_t n = phi.source.dim();
  QMatrix block(dm + n, dm + n);
  std::vector<QMatrix> images;
  for (std::size_t a = 0; a < dm; ++a) {
    QMatrix img = phi.map * m1.basis[a] * *inv;
    auto coords = matrix_coordinates(m2.basis, img);
    if (!coords) throw PreconditionError("extend_isomorphism_to_g0: phi m1 phi^-1 is not contained in m2");
    for (std::size_t b = 0; b < dm; ++b) block(b, a) = (*coords)[b];
    images.push_back(img);
  }
  if (rank(QMatrix::from_columns([&] {
        std::vector<QVec> cols;
        for (std::size_t a = 0; a < dm; ++a) cols.push_back(block.column(a));
        return cols;
      }(), dm + n)) != dm)
    throw PreconditionError("extend_isomorphism_to_g0: phi m1 phi^-1 does not fill m2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) block(dm + i, dm + j) = phi.map(i, j);
  std::vector<std::string> n1, n2;
  for (std::size_t a = 0; a < dm; ++a) n1.push_back("M" + std::to_string(a + 1));
  n2 = n1;
  IsoWitness out{semidirect_product(m1.basis, phi.source, n1), semidirect_product(m2.basis, phi.target, n2), block};
  if (!is_isomorphism(out.source, out.target, out.map))
    throw InconsistencyError("extend_isomorphism_to_g0: block map does not preserve brackets");
  return out;
}

std::string Verdict::text() const {
  if (isomorphic_candidates)
    return "isomorphic-candidates (all computed invariants agree; no explicit isomorphism was constructed)";
  return "distinguished by " + invariant + ": " + detail;
}

Verdict compare_iwasawa(const LieAlgebra& s1, const LieAlgebra& s2, const ReconstructionConfig& config) {
  using Invariant = std::function<std::string(const LieAlgebra&)>;
  auto nil_alg = [](const LieAlgebra& a) { return subalgebra(a, nilradical(a).space.basis()); };
  std::map<const LieAlgebra*, std::optional<ReconstructionReport>> reports;
  auto report = [&](const LieAlgebra& a) -> const ReconstructionReport& {
    auto& slot = reports[&a];
    if (!slot) slot = reconstruct_from_iwasawa(a, config);
    return *slot;
  };
  std::vector<std::pair<std::string, Invariant>> invariants{
      {"dimension", [](const LieAlgebra& a) { return std::to_string(a.dim()); }},
      {"derived series dimensions", [](const LieAlgebra& a) { return dims_of(derived_series(a)); }},
      {"lower central series dimensions", [](const LieAlgebra& a) { return dims_of(lower_central_series(a)); }},
      {"center dimension", [](const LieAlgebra& a) { return std::to_string(center(a).dim()); }},
      {"nilradical dimension", [](const LieAlgebra& a) { return std::to_string(nilradical(a).space.dim()); }},
      {"nilradical lower central series dimensions",
       [&](const LieAlgebra& a) { return dims_of(lower_central_series(nil_alg(a))); }},
      {"nilradical center dimension", [&](const LieAlgebra& a) { return std::to_string(center(nil_alg(a)).dim()); }},
      {"derivation algebra dimension", [](const LieAlgebra& a) { return std::to_string(derivation_algebra(a).dim()); }},
  };
  Verdict v;
  for (const auto& [name, f] : invariants) {
    std::string x = f(s1), y = f(s2);
    if (x != y) {
      v.invariant = name;
      v.detail = x + " vs " + y;
      return v;
    }
  }
  if (!is_nilpotent(s1)) {
    std::vector<std::pair<std::string, std::function<std::string(const ReconstructionReport&)>>> pipeline{
        {"restricted root multiplicities",
         [](const ReconstructionReport& r) {
           std::vector<std::size_t> dims;
           for (const auto& root : r.restricted.roots) dims.push_back(root.space.dim());
           std::sort(dims.begin(), dims.end());
           std::string s = "rank " + std::to_string(r.split_torus.size()) + ", dims";
           for (auto d : dims) s += " " + std::to_string(d);
           return s;
         }},
        {"Satake diagram",
         [](const ReconstructionReport& r) {
           SatakeDiagram d = r.satake;
           d.real_form_label.reset();
           return render(d, "json");
         }},
    };
    for (const auto& [name, f] : pipeline) {
      std::string x = f(report(s1)), y = f(report(s2));
      if (x != y) {
        v.invariant = name;
        v.detail = x + " vs " + y;
        return v;
      }
    }
  }
  v.isomorphic_candidates = true;
  return v;
}

}  // namespace iwasawa
