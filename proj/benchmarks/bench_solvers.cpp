#include <benchmark/benchmark.h>

#include <random>

#include "crossdiff/banded.hpp"
#include "crossdiff/diagnostics.hpp"
#include "crossdiff/exact_solutions.hpp"
#include "crossdiff/fem.hpp"
#include "crossdiff/solver_pb.hpp"
#include "crossdiff/solver_pdelta.hpp"

using namespace crossdiff;

namespace {

SchemeParams step_params(double tau, double delta) {
    SchemeParams p;
    p.tau = tau;
    p.delta = delta;
    p.eps = Epsilon{1e-10};
    p.tol = 1e-8;
    p.max_inner = 100;
    p.t_end = tau;
    return p;
}

void BM_solve_banded(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const int b = static_cast<int>(state.range(1));
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    BandedMatrix m(n, b);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = (i > static_cast<std::size_t>(b) ? i - b : 0);
             j < std::min(n, i + b + 1); ++j) {
            m.set(i, j, i == j ? 8.0 + entry(rng) : entry(rng));
        }
    }
    std::vector<double> rhs(n);
    for (auto& v : rhs) {
        v = entry(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_banded(BandedSystem{m, rhs}));
    }
    state.SetItemsProcessed(state.iterations() * n);
}

void BM_pdelta_step(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
    const auto [u10, u20] = invasion_initial(mesh);
    const double h = mesh->spacing();
    const auto params = step_params(1e-3, h * h);
    const auto lv = LotkaVolterraParams::differentiated(1.0, 1.0, 1.0, 1.0, 2.0, 2.0);
    const PdeltaState s{u10, u20, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdelta_step(s, params, lv, DriftField{}));
    }
}

void BM_pb_step(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
    const auto init = contact_inhibition_initial(mesh, BarenblattParams{});
    const double h = mesh->spacing();
    const auto params = step_params(1e-4, 2.0 * h * h);
    const PbState s{add(init.u1, init.u2), init.r, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pb_step(s, params, LotkaVolterraParams::none(),
                                         DriftField{}, TransportForm::Chi));
    }
}

void BM_oscillation(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    const auto mesh = make_uniform_mesh(-2.0, 2.0, nodes);
    const auto u = interpolate([](double x) { return std::sin(25.0 * x); }, mesh);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oscillation(u));
    }
}

}  // namespace

BENCHMARK(BM_solve_banded)->Args({202, 3})->Args({602, 3})->Args({1002, 3});
BENCHMARK(BM_pdelta_step)->Arg(101)->Arg(301)->Arg(501);
BENCHMARK(BM_pb_step)->Arg(101)->Arg(301)->Arg(501);
BENCHMARK(BM_oscillation)->Arg(101)->Arg(501);

BENCHMARK_MAIN();
