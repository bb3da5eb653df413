#include <benchmark/benchmark.h>

#include <random>

#include "stag/checks.hpp"

using namespace stag;

namespace {

void BM_EnumerateF4(benchmark::State& state) {
    const RootSystem rs = RootSystem::build("F4");
    for (auto _ : state) {
        const GroupEnumeration en = enumerate_group(rs);
        benchmark::DoNotOptimize(en.elements.size());
    }
}
BENCHMARK(BM_EnumerateF4);

void BM_ProfileF4(benchmark::State& state) {
    const RootSystem rs = RootSystem::build("F4");
    const GroupEnumeration en = enumerate_group(rs);
    const ParabolicData triv = make_parabolic(rs, {});
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        const WeylElement& w = en.elements[rng() % en.elements.size()];
        benchmark::DoNotOptimize(profile_raw(rs, w, triv).psi_opp.size());
    }
}
BENCHMARK(BM_ProfileF4);

void BM_BruhatLeqF4(benchmark::State& state) {
    const RootSystem rs = RootSystem::build("F4");
    const GroupEnumeration en = enumerate_group(rs);
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        const WeylElement& v = en.elements[rng() % en.elements.size()];
        const WeylElement& w = en.elements[rng() % en.elements.size()];
        benchmark::DoNotOptimize(bruhat_leq(v, w));
    }
}
BENCHMARK(BM_BruhatLeqF4);

void BM_ScodTableB4(benchmark::State& state) {
    const RootSystem rs = RootSystem::build("B4");
    const ParabolicData p = make_parabolic(rs, {0, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(scod_table(rs, p).size());
    }
}
BENCHMARK(BM_ScodTableB4);

void BM_OrbitPosetF4(benchmark::State& state) {
    const RootSystem rs = RootSystem::build("F4");
    const ParabolicData triv = make_parabolic(rs, {});
    for (auto _ : state) {
        const OrbitPoset poset = OrbitPoset::build(rs, triv);
        benchmark::DoNotOptimize(poset.covers().size());
    }
}
BENCHMARK(BM_OrbitPosetF4);

void BM_KoszulOracle(benchmark::State& state) {
    const auto c = static_cast<int>(state.range(0));
    std::vector<LatticeVector> weights;
    std::mt19937_64 rng(3);
    for (int i = 0; i < c; ++i) {
        LatticeVector v(3);
        for (int j = 0; j < 3; ++j)
            v[j] = static_cast<std::int64_t>(rng() % 11) - 5;
        weights.push_back(std::move(v));
    }
    const AffineModel model{weights, 0};
    const LatticeVector mu(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(koszul_oracle(model, mu).size());
    }
}
BENCHMARK(BM_KoszulOracle)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
