#include <benchmark/benchmark.h>

#include <vector>

#include "ckc/angle_solver.hpp"
#include "ckc/chain.hpp"
#include "ckc/closure.hpp"
#include "ckc/diagonal_space.hpp"
#include "ckc/rng.hpp"

namespace {

ckc::LinkLengths unit_chain(long n) {
    return ckc::LinkLengths(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

void BM_sample_diagonals(benchmark::State& state) {
    ckc::LinkLengths links = unit_chain(state.range(0));
    ckc::SeededRng rng(1);
    for (auto _ : state) {
        ckc::DiagonalVector d = ckc::sample_diagonals(links, rng);
        benchmark::DoNotOptimize(d);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample_diagonals)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_reconstruct(benchmark::State& state) {
    ckc::LinkLengths links = unit_chain(state.range(0));
    ckc::SeededRng rng(2);
    ckc::DiagonalVector d = ckc::sample_diagonals(links, rng);
    for (auto _ : state) {
        ckc::SphericalConfiguration sc = ckc::reconstruct(links, d, rng);
        benchmark::DoNotOptimize(sc);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_reconstruct)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_pipeline(benchmark::State& state) {
    ckc::LinkLengths links = unit_chain(state.range(0));
    ckc::SeededRng rng(3);
    for (auto _ : state) {
        ckc::DiagonalVector d = ckc::sample_diagonals(links, rng);
        ckc::SphericalConfiguration sc = ckc::reconstruct(links, d, rng);
        ckc::ClosedConfiguration cc = ckc::close(links, sc);
        benchmark::DoNotOptimize(cc);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_pipeline)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_endpoint_map(benchmark::State& state) {
    long n = state.range(0);
    ckc::LinkLengths links = unit_chain(n);
    ckc::SeededRng rng(4);
    ckc::DiagonalVector d = ckc::sample_diagonals(links, rng);
    ckc::SphericalConfiguration sc = ckc::reconstruct(links, d, rng);
    for (auto _ : state) {
        ckc::Point3 f = ckc::endpoint_map(links, sc.angles, static_cast<int>(n) - 1);
        benchmark::DoNotOptimize(f);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_endpoint_map)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_membership(benchmark::State& state) {
    long n = state.range(0);
    ckc::LinkLengths links = unit_chain(n);
    ckc::SeededRng rng(5);
    ckc::DiagonalVector d = ckc::sample_diagonals(links, rng);
    for (auto _ : state) {
        bool in = ckc::membership_zan_stein(links, d);
        benchmark::DoNotOptimize(in);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_membership)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
