#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qgauge/qgauge.hpp"

using namespace qgauge;

static void BM_AiryAi(benchmark::State& state) {
    std::vector<double> xs;
    for (int i = 0; i < 1024; ++i) xs.push_back(-30.0 + 38.0 * i / 1023.0);
    for (auto _ : state) {
        double sum = 0.0;
        for (double x : xs) sum += airy_ai(x).ai;
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_AiryAi);

static void BM_AiryOracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(airy_oracle(-7.3, 1e-12));
}
BENCHMARK(BM_AiryOracle);

static void BM_TridiagonalSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<complex> lower(n), diag(n), upper(n), rhs(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i] = {u(rng), u(rng)};
        upper[i] = {u(rng), u(rng)};
        diag[i] = {4.0, u(rng)};
        rhs[i] = {u(rng), u(rng)};
    }
    TridiagonalSolver solver;
    solver.factor(lower, diag, upper);
    for (auto _ : state) {
        solver.solve(rhs, x);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TridiagonalSolve)->Arg(1024)->Arg(4096)->Arg(16384);

static void BM_CrankNicolsonSteps(benchmark::State& state, GaugeSpec gauge) {
    const auto params = PhysicalParams::with_field(0.5);
    const WaveField wf = gaussian_packet(SpatialGrid(-30.0, 30.0, 4096), -5.0, 0.0, 1.0, 1.0, gauge);
    const PropagatorConfig cfg{1e-3, 100, Boundary::Dirichlet, 100};
    for (auto _ : state) benchmark::DoNotOptimize(crank_nicolson_propagate(wf, gauge, params, cfg).field.time());
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK_CAPTURE(BM_CrankNicolsonSteps, static, GaugeSpec{StaticGauge{}});
BENCHMARK_CAPTURE(BM_CrankNicolsonSteps, dynamic, GaugeSpec{DynamicGauge{}});

static void BM_DoubleEgtSample(benchmark::State& state) {
    const auto params = PhysicalParams::with_field(1.0);
    const AnalyticField composed = double_egt(analytic_field({SolutionKind::Psi1Static, 0.3}, params), params);
    const SpatialGrid grid(-10.0, 5.0, 512);
    for (auto _ : state) benchmark::DoNotOptimize(composed.sample(grid, 1.0)[0]);
}
BENCHMARK(BM_DoubleEgtSample);
BENCHMARK_MAIN();
