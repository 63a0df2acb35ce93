#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "iwasawa/catalog.hpp"
#include "iwasawa/derivations.hpp"
#include "iwasawa/einstein.hpp"
#include "iwasawa/reconstruct.hpp"

using namespace iwasawa;

namespace {

const LieAlgebra& iwasawa_algebra(const std::string& label) {
  static std::map<std::string, LieAlgebra> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, iwasawa_of(catalog_entry(label))).first;
  return it->second;
}

void BM_Derivations(benchmark::State& state, const std::string& label) {
  const LieAlgebra& s = iwasawa_algebra(label);
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(s).dim());
}

void BM_KillingForm(benchmark::State& state, const std::string& label) {
  LieAlgebra g = catalog_entry(label).g;
  for (auto _ : state) benchmark::DoNotOptimize(killing_form(g).matrix.rows());
}

void BM_EinsteinDouble(benchmark::State& state, const std::string& label) {
  SolverParams p;
  p.precision_bits = 64;  // no MPFR polish
  const LieAlgebra& s = iwasawa_algebra(label);
  for (auto _ : state) benchmark::DoNotOptimize(einstein_solve(s, 1, p).residual);
}

void BM_EinsteinPolished(benchmark::State& state, const std::string& label) {
  const LieAlgebra& s = iwasawa_algebra(label);
  for (auto _ : state) benchmark::DoNotOptimize(einstein_solve(s, 1).residual);
}

void BM_Reconstruct(benchmark::State& state, const std::string& label) {
  const LieAlgebra& s = iwasawa_algebra(label);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_from_iwasawa(s).real_form_label);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Derivations, su21, std::string("su(2,1)"));
BENCHMARK_CAPTURE(BM_Derivations, su31, std::string("su(3,1)"));
BENCHMARK_CAPTURE(BM_KillingForm, su31, std::string("su(3,1)"));
BENCHMARK_CAPTURE(BM_EinsteinDouble, su21, std::string("su(2,1)"));
BENCHMARK_CAPTURE(BM_EinsteinDouble, sp4, std::string("sp(4,R)"));
BENCHMARK_CAPTURE(BM_EinsteinPolished, su21, std::string("su(2,1)"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reconstruct, so41, std::string("so(4,1)"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reconstruct, su21, std::string("su(2,1)"))->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
