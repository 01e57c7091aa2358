#include <benchmark/benchmark.h>

#include <hensel/newton_polygon.hpp>
#include <hensel/valued_field.hpp>

#include <random>

using namespace hensel;

namespace {

std::vector<Value> random_values(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> amt(-40, 40);
    std::uniform_int_distribution<int> inf(0, 5);
    std::vector<Value> v;
    for (std::size_t i = 0; i + 1 < n; ++i)
        v.push_back(inf(rng) == 0 ? Value::infinity() : Value(amt(rng)));
    v.emplace_back(amt(rng));
    return v;
}

}  // namespace

static void BM_polygon_from_values(benchmark::State& state) {
    const auto v = random_values(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        const NewtonPolygon P = NewtonPolygon::from_values(v);
        benchmark::DoNotOptimize(P.vertices().data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_polygon_from_values)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

static void BM_polygon_of_polynomial(benchmark::State& state) {
    const PadicField Q5(5);
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> unit(1, 4);
    std::uniform_int_distribution<int> exp(0, 10);
    std::vector<Rat> c;
    for (long long i = 0; i <= state.range(0); ++i)
        c.push_back(Rat(unit(rng)) * Rat(int_pow(Int(5), static_cast<unsigned>(exp(rng)))));
    const Poly<Rat> g(std::move(c));
    for (auto _ : state) {
        const NewtonPolygon P = NewtonPolygon::of_polynomial(g, Q5);
        benchmark::DoNotOptimize(P.segments().data());
    }
}
BENCHMARK(BM_polygon_of_polynomial)->RangeMultiplier(4)->Range(8, 512);

static void BM_polygon_isolated_slopes(benchmark::State& state) {
    const auto v = random_values(256, 44);
    const NewtonPolygon P = NewtonPolygon::from_values(v);
    for (auto _ : state) {
        auto iso = P.isolated_slopes();
        benchmark::DoNotOptimize(iso.data());
    }
}
BENCHMARK(BM_polygon_isolated_slopes);

BENCHMARK_MAIN();
