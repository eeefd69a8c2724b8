#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "hadamard/catalog.hpp"
#include "hadamard/contour.hpp"
#include "hadamard/euler_ode.hpp"
#include "hadamard/germ.hpp"
#include "hadamard/pade.hpp"
#include "hadamard/singularity.hpp"
#include "hadamard/volterra.hpp"

using namespace hadamard;

namespace {

TruncatedGerm counting_germ(std::size_t order) {
    return pole_coefficients(Complex(1, 0), 2, order);
}

void bm_termwise_round_trip(benchmark::State& state) {
    const std::size_t order = std::size_t(state.range(0));
    TruncatedGerm f = counting_germ(order);
    for (auto _ : state) {
        TruncatedGerm round = hadamard_product(f, hadamard_inverse(f));
        benchmark::DoNotOptimize(round);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(order));
}
BENCHMARK(bm_termwise_round_trip)->Arg(256)->Arg(1024)->Arg(4096);

void bm_operator_build_and_verify(benchmark::State& state) {
    const std::size_t order = std::size_t(state.range(0));
    RationalGerm f(Complex(1.1, 0.3),
                   {Complex(0.2, 0), Complex(-0.4, 0.1), Complex(0.9, -0.2), Complex(0, 0.5),
                    Complex(1, 0.5)});
    for (auto _ : state) {
        EulerOperator op = build_euler_operator(f);
        benchmark::DoNotOptimize(verify_recurrence(op, f, order));
    }
}
BENCHMARK(bm_operator_build_and_verify)->Arg(200)->Arg(1000);

void bm_ode_series_solution(benchmark::State& state) {
    const std::size_t order = std::size_t(state.range(0));
    EulerOperator op = build_euler_operator(
        RationalGerm(Complex(1, 0), {Complex(0, 0), Complex(1, 0), Complex(2, 0)}));
    for (auto _ : state) benchmark::DoNotOptimize(solve_ode_series(op, order));
}
BENCHMARK(bm_ode_series_solution)->Arg(256)->Arg(4096);

void bm_pade_with_poles(benchmark::State& state) {
    const std::size_t m = std::size_t(state.range(0));
    TruncatedGerm f = log_over_zeta_coefficients(2 * m + 1);
    for (auto _ : state) benchmark::DoNotOptimize(pade_poles(pade(f, m, m)));
}
BENCHMARK(bm_pade_with_poles)->Arg(8)->Arg(16)->Arg(24);

void bm_quadrature_product(benchmark::State& state) {
    PointEvaluator f =
        rational_evaluator(RationalGerm(Complex(1, 0), {Complex(0, 0), Complex(1, 0)}));
    PointEvaluator g = CatalogGerm::log_over_zeta().evaluator();
    QuadratureSpec spec;
    spec.radius = 0.6;
    spec.nodes = std::size_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hadamard_on_i(f, g, Complex(0.3, 0), spec));
}
BENCHMARK(bm_quadrature_product)->Arg(256)->Arg(1024);

void bm_volterra_solve(benchmark::State& state) {
    const std::size_t order = std::size_t(state.range(0));
    EntireFunctionJet f1(TruncatedGerm({Complex(1, 0), Complex(-0.3, 0), Complex(0.07, 0)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            solve_g1(Complex(2, 0), Complex(0.5, 0), f1, Complex(1.5, 0), order));
}
BENCHMARK(bm_volterra_solve)->Arg(32)->Arg(128);

void bm_singularity_scan(benchmark::State& state) {
    TruncatedGerm ladder = geometric_ladder_inverse(256);
    for (auto _ : state) benchmark::DoNotOptimize(scan_report(ladder));
}
BENCHMARK(bm_singularity_scan);

}  // namespace

BENCHMARK_MAIN();
