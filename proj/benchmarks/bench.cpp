// Throughput of the three main code paths: the multistart power iteration,
// the W3 closed-form decomposition and the brute-force grid oracle.

#include <benchmark/benchmark.h>

#include <random>

#include "gsd/families.hpp"
#include "gsd/oracle.hpp"
#include "gsd/solver.hpp"

namespace {

gsd::QubitState random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<gsd::cplx> amps(std::size_t{1} << n);
    for (auto& a : amps) a = {gauss(rng), gauss(rng)};
    return gsd::QubitState(n, std::move(amps));
}

void bm_find_dominant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(42);
    const gsd::QubitState s = random_state(n, rng);
    gsd::SolverConfig cfg;
    cfg.restarts = 16;
    for (auto _ : state) benchmark::DoNotOptimize(gsd::find_dominant(s, cfg).g);
}
BENCHMARK(bm_find_dominant)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void bm_build_gsd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(43);
    const gsd::QubitState s = random_state(n, rng);
    gsd::SolverConfig cfg;
    cfg.restarts = 16;
    for (auto _ : state) benchmark::DoNotOptimize(gsd::build_gsd(s, cfg).g);
}
BENCHMARK(bm_build_gsd)->Arg(3)->Arg(4)->Arg(6);

void bm_w3_gsd(benchmark::State& state) {
    const gsd::W3Params p(0.55, 0.5, 0.48, 0.46);
    for (auto _ : state) benchmark::DoNotOptimize(gsd::w3_gsd(p).g);
}
BENCHMARK(bm_w3_gsd);

void bm_w3_stationary_solutions(benchmark::State& state) {
    const gsd::W3Params p(0.55, 0.5, 0.48, 0.46);
    for (auto _ : state) benchmark::DoNotOptimize(gsd::w3_stationary_solutions(p).size());
}
BENCHMARK(bm_w3_stationary_solutions);

void bm_oracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(44);
    const gsd::QubitState s = random_state(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gsd::brute_force_g(s));
}
BENCHMARK(bm_oracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
