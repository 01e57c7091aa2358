#include <benchmark/benchmark.h>

#include <hensel/lifting.hpp>

using namespace hensel;

static void BM_lift_padic(benchmark::State& state) {
    const PadicField Q5(5);
    const Poly<Rat> f(std::vector<Rat>{Rat(5), Rat(1), Rat(1)});
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto z = hensel_lift(f, Q5, N);
        benchmark::DoNotOptimize(z.rep);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_lift_padic)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_lift_tadic(benchmark::State& state) {
    const TadicField<RatCoeffField> K(RatCoeffField{}, "t");
    const Poly<RatFunc<Rat>> f(
        std::vector<RatFunc<Rat>>{K.uniformiser(), K.one(), K.one()});
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto z = hensel_lift(f, K, N);
        benchmark::DoNotOptimize(z.rep.coeffs().data());
    }
}
BENCHMARK(BM_lift_tadic)->RangeMultiplier(4)->Range(4, 256);

static void BM_special_zero(benchmark::State& state) {
    const PadicField Q5(5);
    const Poly<Rat> t(std::vector<Rat>{Rat(5), Rat(-1), Rat(1)});
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto z = special_zero(t, Q5, N);
        benchmark::DoNotOptimize(z.rep);
    }
}
BENCHMARK(BM_special_zero)->RangeMultiplier(4)->Range(4, 256);

BENCHMARK_MAIN();
