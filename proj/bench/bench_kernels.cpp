#include <benchmark/benchmark.h>

#include "cfgreens/dirac.hpp"
#include "cfgreens/greens.hpp"
#include "cfgreens/matel.hpp"
#include "cfgreens/potential.hpp"
#include "cfgreens/specfun.hpp"
#include "cfgreens/verify.hpp"

using namespace cfgreens;

namespace {

struct Fixture {
  RadialGrid grid = RadialGrid::build(RadialGrid::kDefaultRnt, RadialGrid::kDefaultH, RadialGrid::kDefaultN);
  PiecewiseCharge pw = linearize(coulomb_charge(79.0), grid);
  GreensFunction gf = build_greens(-367.5, -1, pw);
  RadialOrbital orb = solve_bound(pw, -1, 2);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_kummer_m(benchmark::State& state) {
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kummer_m_scaled(-3.7, 2.99, z));
    z = z < 60.0 ? z * 1.1 : 0.5;
  }
}

void BM_tricomi_u(benchmark::State& state) {
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tricomi_u_scaled(-3.7, 2.99, z));
    z = z < 60.0 ? z * 1.1 : 0.5;
  }
}

void BM_build(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(build_greens(-367.5, -1, f.pw));
}

void BM_tabulate(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(state.range(0) ? tabulate(f.gf) : tabulate_serial(f.gf));
}

void BM_project(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? project_orbital(f.gf, f.orb) : project_orbital_serial(f.gf, f.orb));
}

void BM_matel(benchmark::State& state) {
  const Fixture& f = fixture();
  MatrixElementSpec spec;
  spec.k = 2.0;
  spec.ktilde = 3.0;
  spec.Lambda = 1;
  spec.LambdaTilde = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? radial_matrix_element(f.orb, f.gf, f.orb, spec)
                                            : radial_matrix_element_serial(f.orb, f.gf, f.orb, spec));
}

void BM_solve_bound(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(solve_bound(f.pw, -1, 2));
}

}  // namespace

BENCHMARK(BM_kummer_m);
BENCHMARK(BM_tricomi_u);
BENCHMARK(BM_build)->Unit(benchmark::kMillisecond);
// Argument 0 runs the serial variant, 1 the OpenMP one.
BENCHMARK(BM_tabulate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_project)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_matel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_solve_bound)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
