// Microbenchmarks for the hot paths of the triangle pipeline. The interesting
// comparisons are closed form vs Jacobi for one configuration (the closed
// forms should win by a couple orders of magnitude, which is what makes the
// validation grids cheap), the full correlation report on each path (two
// finite differences means five ground-state solves), and the thermal and
// classical layers that sit on top.
//
// Run with --benchmark_min_time=0.1 for a quick look; the defaults give
// more stable numbers.

#include <benchmark/benchmark.h>

#include <array>

#include "triq/analytic.hpp"
#include "triq/classical.hpp"
#include "triq/correlations.hpp"
#include "triq/model.hpp"
#include "triq/sweep.hpp"
#include "triq/thermal.hpp"

namespace {

const triq::CouplingConfig kFrustrated{6.0, 1.0, 0.9, 1.0};
const triq::CouplingConfig kWedge{6.0, 1.0, 0.9, 0.8};

void BM_BuildHamiltonian(benchmark::State& state) {
  for (auto _ : state) {
    auto h = triq::build_hamiltonian(kFrustrated);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_BuildHamiltonian);

void BM_Eigendecompose(benchmark::State& state) {
  const auto h = triq::build_hamiltonian(kFrustrated);
  for (auto _ : state) {
    auto spectrum = triq::eigendecompose(h);
    benchmark::DoNotOptimize(spectrum);
  }
}
BENCHMARK(BM_Eigendecompose);

void BM_AnalyticSpectrumOneParam(benchmark::State& state) {
  for (auto _ : state) {
    auto energies = triq::analytic_spectrum_one_param(6.0, 0.9);
    benchmark::DoNotOptimize(energies);
  }
}
BENCHMARK(BM_AnalyticSpectrumOneParam);

void BM_AnalyticT3OneParam(benchmark::State& state) {
  for (auto _ : state) {
    auto nab = triq::analytic_nab_t3_one_param(6.0, 0.9);
    benchmark::DoNotOptimize(nab);
  }
}
BENCHMARK(BM_AnalyticT3OneParam);

void BM_AnalyticT3TwoParam(benchmark::State& state) {
  for (auto _ : state) {
    double t3 = triq::analytic_t3_two_param(6.0, 0.9, 0.8);
    benchmark::DoNotOptimize(t3);
  }
}
BENCHMARK(BM_AnalyticT3TwoParam);

void BM_GroundT3Numeric(benchmark::State& state) {
  for (auto _ : state) {
    double t3 = triq::ground_t3(kFrustrated, 'B', /*numeric_only=*/true);
    benchmark::DoNotOptimize(t3);
  }
}
BENCHMARK(BM_GroundT3Numeric);

void BM_GroundT3Analytic(benchmark::State& state) {
  for (auto _ : state) {
    double t3 = triq::ground_t3(kFrustrated, 'B');
    benchmark::DoNotOptimize(t3);
  }
}
BENCHMARK(BM_GroundT3Analytic);

void BM_CorrelationReportAnalytic(benchmark::State& state) {
  for (auto _ : state) {
    auto report = triq::correlation_report(kWedge);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CorrelationReportAnalytic);

void BM_CorrelationReportNumeric(benchmark::State& state) {
  for (auto _ : state) {
    auto report = triq::correlation_report(kWedge, 'B', 0.0,
                                           /*numeric_only=*/true);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CorrelationReportNumeric);

void BM_GibbsState(benchmark::State& state) {
  const auto spectrum = triq::eigendecompose(triq::build_hamiltonian(kFrustrated));
  for (auto _ : state) {
    auto point = triq::gibbs_state(spectrum, 0.3);
    benchmark::DoNotOptimize(point);
  }
}
BENCHMARK(BM_GibbsState);

void BM_ThermalT3(benchmark::State& state) {
  for (auto _ : state) {
    double t3 = triq::thermal_t3(kFrustrated, 0.3);
    benchmark::DoNotOptimize(t3);
  }
}
BENCHMARK(BM_ThermalT3);

void BM_ClassicalGroundSearch(benchmark::State& state) {
  const std::array<double, 3> couplings{-1.0, -1.0, -1.0};
  for (auto _ : state) {
    auto ground = triq::classical_ground_search(couplings);
    benchmark::DoNotOptimize(ground);
  }
}
BENCHMARK(BM_ClassicalGroundSearch);

void BM_SweepT3Grid(benchmark::State& state) {
  triq::SweepSpec spec;
  spec.axis1 = {"j", -2.0, 2.0, 21};
  spec.axis2 = triq::SweepAxis{"eta", 0.5, 1.5, 11};
  spec.quantities = {"t3"};
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = triq::run_sweep(spec, threads);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * 21 * 11);
}
BENCHMARK(BM_SweepT3Grid)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
