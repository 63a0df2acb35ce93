#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "iwasawa/catalog.hpp"
#include "iwasawa/compact.hpp"
#include "iwasawa/derivations.hpp"
#include "iwasawa/einstein.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/json_io.hpp"
#include "iwasawa/reconstruct.hpp"
#include "iwasawa/satake.hpp"

using namespace iwasawa;

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int max_iters = 20000;
  int precision_bits = 256;
  std::string ansatz = "full";
};

/// Defaults, then IWASAWA_TOL / IWASAWA_PRECISION_BITS, then explicit flags.
void apply_env(RunConfig& cfg) {
  if (const char* t = std::getenv("IWASAWA_TOL")) {
    try {
      cfg.tol = std::stod(t);
    } catch (const std::exception&) {
      throw FormatError(std::string("IWASAWA_TOL is not a number: ") + t);
    }
  }
  if (const char* p = std::getenv("IWASAWA_PRECISION_BITS")) {
    try {
      cfg.precision_bits = std::stoi(p);
    } catch (const std::exception&) {
      throw FormatError(std::string("IWASAWA_PRECISION_BITS is not an integer: ") + p);
    }
  }
}

void check(const RunConfig& cfg) {
  if (!(cfg.tol > 0)) throw FormatError("tol must be positive");
  if (cfg.precision_bits < 64) throw FormatError("precision_bits must be at least 64");
  if (cfg.max_iters <= 0) throw FormatError("max_iters must be positive");
  if (cfg.ansatz != "full" && cfg.ansatz != "diagonal") throw FormatError("ansatz must be 'full' or 'diagonal'");
}

SolverParams solver(const RunConfig& cfg) {
  SolverParams p;
  p.tol = cfg.tol;
  p.max_iters = cfg.max_iters;
  p.precision_bits = cfg.precision_bits;
  p.ansatz = cfg.ansatz == "diagonal" ? MetricAnsatz::Diagonal : MetricAnsatz::Full;
  return p;
}

void add_numeric_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "seed for the initial metric");
  cmd->add_option("--tol", cfg.tol, "residual tolerance");
  cmd->add_option("--max-iters", cfg.max_iters, "descent iteration cap");
  cmd->add_option("--precision-bits", cfg.precision_bits, "MPFR precision of the polish stage");
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

Json metric_json(const MetricResult& r) {
  return {{"converged", r.converged},
          {"iterations", r.iterations},
          {"residual", r.residual},
          {"einstein_constant", r.einstein_constant},
          {"normalized_einstein_constant", r.normalized_einstein_constant},
          {"normalization", r.normalization},
          {"ricci_spectrum", r.ricci_spectrum},
          {"metric", matrix_json(r.metric.matrix)},
          {"precision_bits", r.metric.precision_bits},
          {"diagnostics", r.diagnostics}};
}

Json full_metric_json(const MetricResult& r) {
  const auto entries = format_metric(r.metric);
  const auto n = static_cast<std::size_t>(r.metric.matrix.rows());
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(entries[i * n + j]);
    rows.push_back(row);
  }
  return {{"dim", n}, {"precision_bits", r.metric.precision_bits}, {"matrix", rows}};
}

Json derivations_json(const DerivationSpace& d) {
  Json basis = Json::array();
  for (const auto& m : d.basis) basis.push_back(to_json(m));
  std::ostringstream hash;
  hash << std::hex << d.ambient.hash();
  return {{"ambient_hash", hash.str()}, {"dim", d.dim()}, {"basis", basis}};
}

std::string dims(const std::vector<Subspace>& series) {
  std::string s;
  for (const auto& x : series) s += (s.empty() ? "" : ",") + std::to_string(x.dim());
  return s;
}

Json analyze(const LieAlgebra& alg) {
  Json j;
  j["dim"] = alg.dim();
  j["solvable"] = is_solvable(alg);
  j["nilpotent"] = is_nilpotent(alg);
  j["completely_solvable"] = is_completely_solvable(alg);
  j["derived_series_dims"] = dims(derived_series(alg));
  j["lower_central_series_dims"] = dims(lower_central_series(alg));
  j["center_dim"] = center(alg).dim();
  auto kf = killing_form(alg);
  auto in = inertia(kf.matrix);
  j["killing_form"] = to_json(kf.matrix);
  j["killing_inertia"] = {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
  if (is_solvable(alg)) {
    auto nr = nilradical(alg);
    Json basis = Json::array();
    for (const auto& v : nr.space.basis()) basis.push_back(to_json(v));
    j["nilradical"] = {{"dim", nr.space.dim()}, {"basis", basis}};
  }
  return j;
}

Json violations_json(const ValidationReport& rep, const LieAlgebra& alg) {
  Json list = Json::array();
  for (const auto& v : rep.violations)
    list.push_back({{"kind", v.kind},
                    {"basis", {alg.names()[v.i], alg.names()[v.j], alg.names()[v.k]}}});
  return list;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_rendered(const std::string& text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << "\n";
}

void emit_error(const std::string& kind, const std::string& message, const Json& extra = nullptr) {
  Json e{{"error", kind}, {"message", message}};
  if (!extra.is_null()) e.update(extra);
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct real semisimple Lie algebras from their Iwasawa subalgebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string input, input_b, emit, render_format, label, part = "iwasawa";
  std::vector<std::uint64_t> seeds;
  bool nilsoliton = false;

  auto* validate_cmd = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
  validate_cmd->add_option("file", input, "algebra JSON")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "series, center, nilradical, Killing form");
  analyze_cmd->add_option("--input,file", input, "algebra JSON")->required();

  auto* derive_cmd = app.add_subcommand("derive", "basis of the derivation algebra");
  derive_cmd->add_option("--input,file", input, "algebra JSON")->required();

  auto* pre_cmd = app.add_subcommand("pre-einstein", "pre-Einstein derivation of a nilpotent algebra");
  pre_cmd->add_option("--input,file", input, "algebra JSON")->required();

  auto* einstein_cmd = app.add_subcommand("einstein", "left-invariant Einstein metric (or nilsoliton)");
  einstein_cmd->add_option("--input,file", input, "algebra JSON")->required();
  add_numeric_flags(einstein_cmd, cfg);
  einstein_cmd->add_option("--ansatz", cfg.ansatz, "full or diagonal");
  einstein_cmd->add_option("--emit-metric", emit, "write the metric at full precision");
  einstein_cmd->add_flag("--nilsoliton", nilsoliton, "solve for a nilsoliton on a nilpotent input");

  auto* recover_cmd = app.add_subcommand("recover-m", "maximal compact subalgebra of Der(s)");
  recover_cmd->add_option("--input,file", input, "algebra JSON")->required();
  add_numeric_flags(recover_cmd, cfg);
  recover_cmd->add_option("--seeds", seeds, "seeds to cross-check (default: seed, seed+1)");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "identify the real form with Iwasawa subalgebra s");
  reconstruct_cmd->add_option("--input,file", input, "algebra JSON")->required();
  add_numeric_flags(reconstruct_cmd, cfg);
  reconstruct_cmd->add_option("--emit-report", emit, "write the full report JSON");
  reconstruct_cmd->add_option("--render", render_format, "also print the Satake diagram (text, json, dot)");

  auto* satake_cmd = app.add_subcommand("satake", "render the tabulated Satake diagram of a real form");
  auto* label_opt = satake_cmd->add_option("--label", label, "real form, e.g. su(2,1) or EIII");
  satake_cmd->add_option("--render", render_format, "text, json or dot")->default_val("text");
  bool list_forms = false;
  auto* list_opt = satake_cmd->add_flag("--list", list_forms, "list known labels instead");
  label_opt->excludes(list_opt);
  satake_cmd->callback([&] {
    if (!list_forms && label.empty()) throw CLI::RequiredError("--label or --list");
  });

  auto* compare_cmd = app.add_subcommand("compare", "compare two Iwasawa-type algebras");
  compare_cmd->add_option("--a", input, "first algebra JSON")->required();
  compare_cmd->add_option("--b", input_b, "second algebra JSON")->required();
  add_numeric_flags(compare_cmd, cfg);

  auto* catalog_cmd = app.add_subcommand("catalog", "classical real forms");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "shipped labels");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "write a part of an entry as algebra JSON");
  emit_cmd->add_option("--label", label, "e.g. su(2,1)")->required();
  emit_cmd->add_option("--part", part, "g, iwasawa, nilradical, k, a, n or m")->default_val("iwasawa");

  try {
    apply_env(cfg);
  } catch (const FormatError& e) {
    emit_error("format", e.what());
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    check(cfg);
    if (*validate_cmd) {
      LieAlgebra alg = load_algebra(input);
      auto rep = validate(alg);
      if (!rep.ok) {
        print({{"ok", false}, {"violations", violations_json(rep, alg)}});
        emit_error("format", "structure constants violate antisymmetry or the Jacobi identity");
        return 2;
      }
      print({{"ok", true}, {"dim", alg.dim()}});
    } else if (*analyze_cmd) {
      print(analyze(load_algebra(input)));
    } else if (*derive_cmd) {
      LieAlgebra alg = load_algebra(input);
      Json j = derivations_json(derivation_algebra(alg));
      j["inner_dim"] = Subspace(alg.dim() * alg.dim(), [&] {
                         std::vector<QVec> flat;
                         for (const auto& m : inner_derivations(alg)) {
                           QVec v;
                           for (std::size_t i = 0; i < m.rows(); ++i)
                             for (std::size_t k = 0; k < m.cols(); ++k) v.push_back(m(i, k));
                           flat.push_back(v);
                         }
                         return flat;
                       }()).dim();
      print(j);
    } else if (*pre_cmd) {
      auto phi = pre_einstein_derivation(load_algebra(input));
      print({{"pre_einstein", to_json(phi.matrix)}});
    } else if (*einstein_cmd) {
      LieAlgebra alg = load_algebra(input);
      if (nilsoliton) {
        auto r = nilsoliton_solve(alg, cfg.seed, solver(cfg));
        print({{"metric", metric_json(r.metric)},
               {"derivation", matrix_json(r.derivation)},
               {"soliton_constant", r.soliton_constant},
               {"leibniz_residual", r.leibniz_residual}});
        if (!emit.empty()) save_json(emit, full_metric_json(r.metric));
      } else {
        auto r = einstein_solve(alg, cfg.seed, solver(cfg));
        print(metric_json(r));
        if (!emit.empty()) save_json(emit, full_metric_json(r));
        if (!r.converged) throw ConvergenceError("einstein: " + r.diagnostics);
      }
    } else if (*recover_cmd) {
      if (seeds.empty()) seeds = {cfg.seed, cfg.seed + 1};
      auto mc = maximal_compact_derivations(load_algebra(input), seeds, solver(cfg));
      Json j = derivations_json(mc.m);
      j["certificate"] = {{"killing_negdef_on_derived", mc.certificate.killing_negdef_on_derived},
                          {"spectra_imaginary", mc.certificate.spectra_imaginary},
                          {"rationalized", mc.certificate.rationalized},
                          {"valid", mc.certificate.valid()}};
      j["seeds"] = mc.seeds;
      j["seed_dims"] = mc.seed_dims;
      j["seeds_agree"] = mc.seeds_agree;
      j["diagnostics"] = mc.diagnostics;
      print(j);
      if (!mc.certificate.valid() || !mc.seeds_agree) throw InconsistencyError("recover-m: " + mc.diagnostics);
    } else if (*reconstruct_cmd) {
      ReconstructionConfig rc;
      rc.seeds = {cfg.seed, cfg.seed + 1};
      rc.solver = solver(cfg);
      auto rep = reconstruct_from_iwasawa(load_algebra(input), rc);
      if (!emit.empty()) save_json(emit, report_to_json(rep));
      std::cout << rep.real_form_label.value_or("unidentified") << "\n";
      if (!render_format.empty()) print_rendered(render(rep.satake, render_format));
      if (!rep.real_form_label) throw InconsistencyError("reconstruct: Satake diagram is not in the table");
    } else if (*satake_cmd) {
      if (list_forms) {
        for (const auto& l : known_real_forms()) std::cout << l << "\n";
      } else {
        print_rendered(render(satake_for_label(label), render_format));
      }
    } else if (*compare_cmd) {
      ReconstructionConfig rc;
      rc.seeds = {cfg.seed, cfg.seed + 1};
      rc.solver = solver(cfg);
      std::cout << compare_iwasawa(load_algebra(input), load_algebra(input_b), rc).text() << "\n";
    } else if (*list_cmd) {
      for (const auto& l : catalog_labels()) std::cout << l << "\n";
    } else if (*emit_cmd) {
      CatalogEntry e = catalog_entry(label);
      LieAlgebra out;
      if (part == "g") {
        out = e.g;
      } else if (part == "iwasawa") {
        out = iwasawa_of(e);
      } else if (part == "nilradical") {
        LieAlgebra s = iwasawa_of(e);
        out = subalgebra(s, nilradical(s).space.basis());
      } else if (part == "k" || part == "a" || part == "n" || part == "m") {
        const Subspace& sub = part == "k" ? e.k : part == "a" ? e.a : part == "n" ? e.n : e.m;
        out = subalgebra(e.g, sub.basis());
      } else {
        throw FormatError("unknown part '" + part + "'");
      }
      print(algebra_to_json(out));
    }
  } catch (const FormatError& e) {
    emit_error("format", e.what());
    return 2;
  } catch (const StageError& e) {
    emit_error(e.kind(), e.what(), {{"stage", e.stage()}});
    return 1;
  } catch (const DomainError& e) {
    emit_error(e.kind(), e.what());
    return 1;
  }
  return 0;
}
