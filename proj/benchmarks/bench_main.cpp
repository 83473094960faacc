#include <benchmark/benchmark.h>

#include <random>

#include "gvkit/cech.hpp"
#include "gvkit/gvgw.hpp"
#include "gvkit/grr.hpp"
#include "gvkit/k3hilb.hpp"

using namespace gvkit;

static void BM_HilbSeries(benchmark::State& state) {
    int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(k3::hilb_series(kmax));
    }
}
BENCHMARK(BM_HilbSeries)->Arg(3)->Arg(5)->Arg(7);

static void BM_GvTable(benchmark::State& state) {
    int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(k3::gv_table(kmax));
    }
}
BENCHMARK(BM_GvTable)->Arg(3)->Arg(5);

static void BM_VerifyKkv(benchmark::State& state) {
    int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(k3::verify_kkv(kmax).equal);
    }
}
BENCHMARK(BM_VerifyKkv)->Arg(5);

static void BM_GvToGwRoundTrip(benchmark::State& state) {
    gvgw::GvTable gv;
    std::mt19937_64 rng(1);
    for (int d = 1; d <= 6; ++d) {
        for (int h = 0; h <= 4; ++h) {
            gv.set(h, d, Integer(static_cast<long long>(rng() % 101) - 50));
        }
    }
    for (auto _ : state) {
        auto gw = gvgw::gv_to_gw(gv, 4, 6);
        benchmark::DoNotOptimize(gvgw::gw_to_gv(gw, 4, 6));
    }
}
BENCHMARK(BM_GvToGwRoundTrip);

static void BM_ParityRandom(benchmark::State& state) {
    std::mt19937_64 rng(2);
    grr::GrrContext ctx = grr::example_context(grr::bicubic_cy3());
    for (auto _ : state) {
        auto cd = grr::det_twist_reduce(grr::random_line_bundle_sum(rng, ctx, 4), ctx);
        benchmark::DoNotOptimize(grr::parity_check(cd, ctx).even);
    }
}
BENCHMARK(BM_ParityRandom);

static void BM_Obstruction(benchmark::State& state) {
    std::vector<cech::Face> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {1, 3, 5}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}};
    std::vector<cech::Face> pairs;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) pairs.push_back({i, j});
    }
    cech::Nerve rp2({"u1", "u2", "u3", "u4", "u5", "u6"}, pairs, tris, {});
    cech::Cochain flip = cech::zero_cochain(rp2, 2);
    flip.values[{0, 1, 2}] = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cech::obstruction_class(rp2, flip).trivial);
    }
}
BENCHMARK(BM_Obstruction);

BENCHMARK_MAIN();
