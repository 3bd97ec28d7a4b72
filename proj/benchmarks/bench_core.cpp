#include <benchmark/benchmark.h>

#include "thetakit/catalog.hpp"
#include "thetakit/localfield.hpp"

using namespace thetakit;

static void BM_h1_s3_z6(benchmark::State& state) {
    auto m = GammaModule::trivial(FiniteGroup::symmetric3(), FiniteAbelianGroup({6}));
    for (auto _ : state) benchmark::DoNotOptimize(h1(m));
}
BENCHMARK(BM_h1_s3_z6);

static void BM_h2_c4_z4(benchmark::State& state) {
    auto m = GammaModule::trivial(FiniteGroup::cyclic(4), FiniteAbelianGroup({4}));
    for (auto _ : state) benchmark::DoNotOptimize(h2(m));
}
BENCHMARK(BM_h2_c4_z4);

static void BM_index_report_s3_sign(benchmark::State& state) {
    auto m = GammaModule::trivial(FiniteGroup::symmetric3(), FiniteAbelianGroup({2}));
    CohClass cls = CohClass::of(Cocycle1(m, {0, 1, 1, 0, 0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(index_report(cls));
}
BENCHMARK(BM_index_report_s3_sign);

static void BM_heisenberg_build(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int g = static_cast<int>(state.range(1));
    for (auto _ : state) {
        HeisenbergGroup h(std::vector<int>(g, n));
        benchmark::DoNotOptimize(h.order());
    }
}
BENCHMARK(BM_heisenberg_build)->Args({3, 1})->Args({5, 2})->Args({7, 2});

static void BM_commutator_pairing_3_2(benchmark::State& state) {
    HeisenbergGroup h({3, 3});
    for (auto _ : state) benchmark::DoNotOptimize(h.commutator_pairing());
}
BENCHMARK(BM_commutator_pairing_3_2);

static void BM_phi_yu_verify(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int g = static_cast<int>(state.range(1));
    auto h = std::make_shared<const HeisenbergGroup>(std::vector<int>(g, n));
    PhiYu phi(h);
    for (auto _ : state) benchmark::DoNotOptimize(phi.verify_isomorphism());
}
BENCHMARK(BM_phi_yu_verify)->Args({5, 1})->Args({7, 2});

static void BM_enumerate_g1_3_1(benchmark::State& state) {
    HeisenbergGroup h({3});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_g1(h));
}
BENCHMARK(BM_enumerate_g1_3_1);

static void BM_obstruction_sweep(benchmark::State& state) {
    auto inst = catalog_lagrangian().front();
    auto etas = z1(inst.data->k());
    for (auto _ : state) {
        for (const auto& chi : inst.chis)
            for (const auto& eta : etas)
                benchmark::DoNotOptimize(obstruction_delta(*inst.data, chi, eta));
    }
}
BENCHMARK(BM_obstruction_sweep);

static void BM_symbol_table_11_5(benchmark::State& state) {
    TameLocalModel model(11, 5);
    auto classes = all_classes(model);
    for (auto _ : state) {
        int acc = 0;
        for (const auto& a : classes)
            for (const auto& b : classes) acc += tame_symbol(a, b, model);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_symbol_table_11_5);

static void BM_shift_search(benchmark::State& state) {
    TameLocalModel model(7, 3);
    std::vector<std::vector<UnitClass>> H{{UnitClass{0, 0}, UnitClass{0, 0}}};
    for (auto _ : state) benchmark::DoNotOptimize(nonvanishing_shift_search(H, 1, model));
}
BENCHMARK(BM_shift_search);

BENCHMARK_MAIN();
