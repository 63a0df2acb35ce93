// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero when a
// criterion fails, unless it was named with --xfail N (then it must fail).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "iwasawa/compact.hpp"
#include "iwasawa/derivations.hpp"
#include "iwasawa/einstein.hpp"
#include "iwasawa/reconstruct.hpp"
#include "iwasawa/roots.hpp"
#include "iwasawa/satake.hpp"

using namespace iwasawa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::map<std::string, ReconstructionReport> g_reports;

Outcome round_trip() {
  auto t0 = Clock::now();
  std::ostringstream os;
  bool ok = true;
  for (const auto& l : catalog_labels()) {
    try {
      auto rep = reconstruct_from_iwasawa(iwasawa_of(fixtures::entry(l)));
      std::string got = rep.real_form_label.value_or("unidentified");
      ok = ok && got == l;
      if (got != l) os << l << " -> " << got << "; ";
      g_reports.emplace(l, std::move(rep));
    } catch (const std::exception& e) {
      ok = false;
      os << l << " threw " << e.what() << "; ";
    }
  }
  double t = seconds_since(t0);
  ok = ok && t <= 300;
  os << catalog_labels().size() << " entries in " << std::fixed << std::setprecision(1) << t << " s (limit 300 s)";
  return {ok, os.str()};
}

Outcome heisenberg_ambiguity() {
  bool ok = true;
  std::ostringstream os;
  std::vector<std::string> labels;
  for (const auto* l : {"sl(3,R)", "su(2,1)"}) {
    LieAlgebra s = iwasawa_of(fixtures::entry(l));
    LieAlgebra n = subalgebra(s, nilradical(s).space.basis());
    auto w = find_nilpotent_isomorphism(heisenberg(), n);
    bool verified = w && oracle::preserves_brackets(heisenberg(), n, w->map);
    ok = ok && verified;
    os << "h3 -> nil(" << l << ") witness " << (verified ? "verified" : "missing") << "; ";
    auto it = g_reports.find(l);
    labels.push_back(it != g_reports.end() && it->second.real_form_label ? *it->second.real_form_label : "?");
  }
  ok = ok && labels[0] != labels[1] && labels[0] != "?" && labels[1] != "?";
  os << "reconstructed labels " << labels[0] << " / " << labels[1];
  return {ok, os.str()};
}

Outcome lemma_cross_check() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& l : catalog_labels()) {
    const auto& e = fixtures::entry(l);
    std::size_t expected =
        oracle::centralizer_dim(fixtures::realize_all(e, e.k.basis()), fixtures::realize_all(e, e.a.basis()));
    auto mc = maximal_compact_derivations(iwasawa_of(e), {1, 2});
    bool good = mc.m.dim() == expected && mc.seeds_agree && mc.certificate.valid();
    ok = ok && good;
    os << l << " " << mc.m.dim() << "/" << expected << (good ? "" : " MISMATCH") << "; ";
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    auto mc = maximal_compact_derivations(real_hyperbolic(n), {1, 2});
    bool good = mc.m.dim() == n * (n - 1) / 2 && mc.seeds_agree && mc.certificate.valid();
    ok = ok && good;
    os << "RxR^" << n << " " << mc.m.dim() << "/" << n * (n - 1) / 2 << (good ? "" : " MISMATCH") << "; ";
  }
  os << "seeds {1,2}";
  return {ok, os.str()};
}

Outcome killing_relation() {
  // Stated relation: B_g = 1/2 B_b on h. Also reports the converse B_b = 1/2 B_g.
  bool stated = true, converse = true;
  std::ostringstream os;
  for (const auto* l : {"sl(2,R)", "sl(3,R)", "sp(4,R)"}) {
    const auto& e = fixtures::entry(l);
    ComplexAlgebra gC = complexify(e.g);
    std::vector<CVec> cartan;
    for (const auto& v : e.a.basis()) cartan.push_back(complexify(v));
    std::vector<QVec> ordering;
    for (std::size_t i = 0; i < cartan.size(); ++i) ordering.push_back(unit_vec<Rational>(cartan.size(), i));
    auto datum = complex_root_decomposition(gC, cartan, cartan.size(), ordering);
    auto rep = borel_killing_relation_check(gC, datum);
    bool s_ok = true, c_ok = true;
    for (std::size_t i = 0; i < cartan.size(); ++i)
      for (std::size_t j = 0; j < cartan.size(); ++j) {
        s_ok = s_ok && rep.b_g(i, j) * Gaussian(2) == rep.b_b(i, j);
        c_ok = c_ok && rep.b_b(i, j) * Gaussian(2) == rep.b_g(i, j);
      }
    stated = stated && s_ok;
    converse = converse && c_ok && rep.holds;
    os << l << " B_g(h1,h1)=" << to_string(rep.b_g(0, 0)) << " B_b(h1,h1)=" << to_string(rep.b_b(0, 0)) << "; ";
  }
  os << "B_g = 1/2 B_b " << (stated ? "holds" : "fails") << " exactly; B_b = 1/2 B_g "
     << (converse ? "holds" : "fails") << " exactly";
  return {stated, os.str()};
}

Outcome einstein_solver() {
  bool ok = true;
  std::ostringstream os;
  double worst_res = 0, worst_rel = 0, worst_t = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto t0 = Clock::now();
      auto r = einstein_solve(real_hyperbolic(n), seed);
      double t = seconds_since(t0);
      double rel = std::abs(r.normalized_einstein_constant + static_cast<double>(n)) / static_cast<double>(n);
      bool good = r.converged && r.residual <= 1e-10 && rel <= 1e-8 && t <= 30;
      ok = ok && good;
      worst_res = std::max(worst_res, r.residual);
      worst_rel = std::max(worst_rel, rel);
      worst_t = std::max(worst_t, t);
      if (!good) os << "n=" << n << " seed " << seed << " failed (" << r.diagnostics << "); ";
    }
  os << std::scientific << std::setprecision(2) << "9 solves: max residual " << worst_res
     << " (limit 1e-10), max rel. error of constant vs -n " << worst_rel << " (limit 1e-8), slowest "
     << std::fixed << worst_t << " s (limit 30 s)";
  return {ok, os.str()};
}

Outcome pre_einstein() {
  std::ostringstream os;
  LieAlgebra h = heisenberg();
  auto phi = pre_einstein_derivation(h).matrix;
  QMatrix expected(3, 3);
  expected(0, 0) = Rational(2, 3);
  expected(1, 1) = Rational(2, 3);
  expected(2, 2) = Rational(4, 3);
  bool exact = phi == expected;
  auto der = derivation_algebra(h);
  bool traces = der.dim() == 6;
  for (const auto& psi : der.basis) traces = traces && (phi * psi).trace() == psi.trace();
  auto sol = nilsoliton_solve(h, 1);
  Eigen::EigenSolver<Eigen::MatrixXd> es(sol.derivation);
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < 3; ++i) ev.push_back(es.eigenvalues()(i).real());
  std::sort(ev.begin(), ev.end());
  double r1 = ev[1] / ev[0], r2 = ev[2] / ev[0];
  bool ratios = std::abs(r1 - 1) <= 1e-6 && std::abs(r2 - 2) <= 1e-6;
  os << "phi " << (exact ? "= diag(2/3,2/3,4/3)" : "MISMATCH") << "; trace identity on " << der.dim()
     << " derivations " << (traces ? "holds" : "fails") << "; nilsoliton ratios 1:" << std::setprecision(9) << r1
     << ":" << r2 << " (tol 1e-6)";
  return {exact && traces && ratios, os.str()};
}

Outcome figure_fidelity() {
  std::ifstream in(std::string(IWASAWA_GOLDEN_DIR) + "/eiii.dot");
  std::stringstream golden;
  golden << in.rdbuf();
  auto d = satake_for_label("EIII");
  bool colors = color_string(d) == "oo***o";
  bool arrow = d.arrows.size() == 1 && d.arrows[0] == std::pair<std::size_t, std::size_t>{0, 5};
  bool bytes = !golden.str().empty() && render(d, "dot") == golden.str();
  std::ostringstream os;
  os << "E6 colors " << color_string(d) << ", arrows " << d.arrows.size() << (arrow ? " {1,6}" : "")
     << ", DOT golden " << (bytes ? "byte-equal" : "DIFFERS");
  return {colors && arrow && bytes, os.str()};
}

Outcome properties() {
  std::ostringstream os;
  bool jacobi = true, invariance = true, grading = true;
  auto algs = fixtures::generated_algebras();
  for (const auto& [label, rep] : g_reports) algs.push_back(rep.g_geq0);
  for (const auto& alg : algs) {
    jacobi = jacobi && validate(alg).ok;
    auto b = killing_form(alg);
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n && invariance; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto x = unit_vec<Rational>(n, i), y = unit_vec<Rational>(n, j), z = unit_vec<Rational>(n, k);
          invariance = invariance && b(alg.bracket(x, y), z) + b(y, alg.bracket(x, z)) == 0;
        }
  }
  for (const auto& l : catalog_labels()) {
    LieAlgebra s = iwasawa_of(fixtures::entry(l));
    auto d = restricted_root_decomposition(s, split_torus_of_iwasawa(s).basis());
    std::vector<std::pair<QVec, Subspace>> spaces{{QVec(d.torus.size(), Rational(0)), d.centralizer}};
    for (const auto& r : d.roots) spaces.emplace_back(r.functional, r.space);
    for (const auto& [f1, s1] : spaces)
      for (const auto& [f2, s2] : spaces) {
        QVec sum = f1;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += f2[i];
        Subspace target = Subspace::zero(s.dim());
        for (const auto& [f3, s3] : spaces)
          if (f3 == sum) target = s3;
        grading = grading && target.contains(bracket_span(s, s1, s2));
      }
  }
  std::mt19937_64 rng(20240607);
  double worst = 0;
  for (const auto& alg : {heisenberg(), iwasawa_of(fixtures::entry("su(2,1)"))}) {
    const int n = static_cast<int>(alg.dim());
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd frame = Eigen::LLT<Eigen::MatrixXd>(fixtures::random_metric(n, rng)).matrixU();
      Eigen::MatrixXd fd(n, n);
      const double h = 1e-5;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
          e(k, l) = h;
          Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
          fd(k, l) = (einstein_functional(alg, (id + e) * frame) - einstein_functional(alg, (id - e) * frame)) / (2 * h);
        }
      Eigen::MatrixXd an = einstein_gradient(alg, frame);
      // h3 has a constant functional (zero gradient), so errors are measured against
      // the largest of |fd|, |analytic| and F
      double scale = std::max({fd.norm(), an.norm(), std::abs(einstein_functional(alg, frame))});
      worst = std::max(worst, (an - fd).norm() / scale);
    }
  }
  bool gradient = worst <= 1e-6;
  os << "Jacobi " << (jacobi ? "ok" : "FAIL") << " and Killing ad-invariance " << (invariance ? "ok" : "FAIL") << " on "
     << algs.size() << " algebras; grading " << (grading ? "ok" : "FAIL") << " on " << catalog_labels().size()
     << " Iwasawa algebras; gradient vs central differences on 40 metrics: max rel. error " << std::scientific
     << std::setprecision(2) << worst << " (limit 1e-6)";
  return {jacobi && invariance && grading && gradient, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> xfail;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--xfail") == 0 && i + 1 < argc) xfail.insert(std::atoi(argv[++i]));

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"round-trip determination", round_trip},
      {"Heisenberg ambiguity", heisenberg_ambiguity},
      {"maximal compact dimensions", lemma_cross_check},
      {"Borel Killing relation", killing_relation},
      {"Einstein solver on R x R^n", einstein_solver},
      {"pre-Einstein derivation and nilsoliton", pre_einstein},
      {"EIII Satake diagram", figure_fidelity},
      {"property suites", properties},
  };
  int unexpected = 0, expected_failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const bool xf = xfail.count(id) > 0;
    std::cout << "criterion " << id << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL")
              << (xf ? " (expected failure)" : "") << " - " << o.detail << std::endl;
    if (xf) {
      if (o.pass) ++unexpected;
      else ++expected_failures;
    } else if (!o.pass) {
      ++unexpected;
    }
  }
  std::cout << "summary: " << criteria.size() - static_cast<std::size_t>(unexpected + expected_failures)
            << " passed, " << expected_failures << " expected failures, " << unexpected << " unexpected results"
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
