#include <benchmark/benchmark.h>

#include <orbitft/formulas.hpp>
#include <orbitft/verify.hpp>

using namespace orbitft;

static void BM_PositiveSystem(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Component comp = canonical_component(make_cartan(n, n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_positive_system(comp));
}
BENCHMARK(BM_PositiveSystem)->Arg(4)->Arg(6)->Arg(8);

static void BM_VandermondeExpansion(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PositiveSystem ps = canonical_positive_system(canonical_component(make_cartan(n, n / 2)));
    for (auto _ : state) benchmark::DoNotOptimize(product_of_roots(n, ps.positives));
}
BENCHMARK(BM_VandermondeExpansion)->Arg(5)->Arg(6)->Arg(7);

static void BM_CrossCartanSet(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CartanModel hk = make_cartan(n, 0);
    CartanModel hl = make_cartan(n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(compute_wkl(hk, hl));
}
BENCHMARK(BM_CrossCartanSet)->Arg(4)->Arg(5)->Arg(6);

// engine costs at a non-canonical component: one canonical computation, then
// relabel transport per call; the memo makes repeat calls cheap
static void BM_DirectEngine(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LeviClass cls = levi_classes(n)[1];
    auto comps = enumerate_components(make_cartan(n, n / 2), ComponentLevel::OrdersAndSigns);
    const Component& comp = comps.back();
    for (auto _ : state) benchmark::DoNotOptimize(nilpotent_ft_direct(cls, comp));
}
BENCHMARK(BM_DirectEngine)->Arg(4)->Arg(5)->Arg(6);

static void BM_OracleEngine(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LeviClass cls = levi_classes(n)[1];
    auto comps = enumerate_components(make_cartan(n, n / 2), ComponentLevel::OrdersAndSigns);
    const Component& comp = comps.back();
    for (auto _ : state) benchmark::DoNotOptimize(nilpotent_ft_oracle(cls, comp));
}
BENCHMARK(BM_OracleEngine)->Arg(4)->Arg(5)->Arg(6);

static void BM_MatchingWall(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Component c1 = canonical_component(make_cartan(n, 0));
    Component c2;
    c2.cartan = make_cartan(n, 1);
    c2.real_order = {0, 1};
    c2.pair_signs.assign(c2.cartan.num_pairs(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_matching(0, c1, c2));
}
BENCHMARK(BM_MatchingWall)->Arg(4)->Arg(6);

static void BM_VerifySuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_suite("oracle", 3, 1));
}
BENCHMARK(BM_VerifySuite);

BENCHMARK_MAIN();
