#include <benchmark/benchmark.h>

#include "basiskit/dynamic_control.hpp"
#include "basiskit/liquidation.hpp"
#include "basiskit/simulation.hpp"
#include "basiskit/static_control.hpp"

namespace {

void BM_Erfc(benchmark::State& state) {
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(basiskit::erfc(x));
        x += 0.01;
        if (x > 6.0) x = -6.0;
    }
}
BENCHMARK(BM_Erfc);

void BM_LiqProbability(benchmark::State& state) {
    basiskit::BarrierProblem problem;
    problem.alpha = 0.15;
    problem.theta_f = 0.0125;
    problem.sigma = 0.6;
    problem.horizon = 1.0 / 365.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(basiskit::liq_probability(problem));
        problem.alpha = problem.alpha < 0.4 ? problem.alpha + 1e-4 : 0.15;
    }
}
BENCHMARK(BM_LiqProbability);

void BM_SolveVariant2(benchmark::State& state) {
    basiskit::StaticProblem problem;
    problem.market.sigma = 0.9;
    problem.theta_f = 0.0125;
    problem.horizon = 1.0 / 365.0;
    problem.epsilon = 0.001;
    for (auto _ : state)
        benchmark::DoNotOptimize(basiskit::solve_variant2(problem));
}
BENCHMARK(BM_SolveVariant2);

void BM_McFirstPassage(benchmark::State& state) {
    basiskit::SimConfig cfg;
    cfg.n_paths = static_cast<std::size_t>(state.range(0));
    cfg.dt = 1.0 / 8760.0 / 60.0;
    cfg.horizon = 1.0 / 8760.0;
    cfg.seed = 7;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            basiskit::mc_first_passage(0.1, 0.0125, 0.0, 0.9, cfg.horizon, cfg));
}
BENCHMARK(BM_McFirstPassage)->Arg(10000)->Arg(100000);

void BM_PolicyStep(benchmark::State& state) {
    basiskit::AlphaBand band{0.173, 0.045, 0.6, 0.99};
    basiskit::PolicyConfig cfg;
    cfg.kappa_h = 0.001;
    cfg.k_fix = 0.0005;
    basiskit::ExecutionCaps caps{basiskit::kUnboundedCap, basiskit::kUnboundedCap};
    double alpha = 0.02;
    for (auto _ : state) {
        benchmark::DoNotOptimize(basiskit::policy_step(alpha, band, 1e6, cfg, caps));
        alpha = alpha < 0.9 ? alpha + 1e-3 : 0.02;
    }
}
BENCHMARK(BM_PolicyStep);

}  // namespace

BENCHMARK_MAIN();
