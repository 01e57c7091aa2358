#include <benchmark/benchmark.h>

#include <hensel/charpoly.hpp>
#include <hensel/local_ring.hpp>

using namespace hensel;

namespace {

FPLocalRing<Rat> uw_ring() {
    return FPLocalRing<Rat>({"u", "w"}, std::vector<std::string>{"u*w"}, Rat(1));
}

}  // namespace

static void BM_buchberger(benchmark::State& state) {
    const std::vector<std::string> vars{"x", "y", "z"};
    const Rat one(1);
    const std::vector<MPoly<Rat>> gens{
        parse_mpoly("x^2 - y", vars, one),
        parse_mpoly("x*y - z", vars, one),
        parse_mpoly("y^2 - x*z", vars, one),
    };
    for (auto _ : state) {
        const GroebnerBasis<Rat> gb = buchberger(gens, vars.size());
        benchmark::DoNotOptimize(gb.gens.data());
    }
}
BENCHMARK(BM_buchberger);

static void BM_normal_form(benchmark::State& state) {
    const FPLocalRing<Rat> R = uw_ring();
    // (u + w)^n has 2^n-ish raw terms before reduction collapses the mixed ones.
    MPoly<Rat> p = R.one();
    const MPoly<Rat> s = R.variable(0) + R.variable(1);
    for (long long i = 0; i < state.range(0); ++i) p = p * s;
    for (auto _ : state) {
        const MPoly<Rat> r = R.nf(p);
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(BM_normal_form)->RangeMultiplier(2)->Range(2, 32);

static void BM_ideal_member_with_cofactors(benchmark::State& state) {
    const std::vector<std::string> vars{"x", "y"};
    const Rat one(1);
    const std::vector<MPoly<Rat>> gens{
        parse_mpoly("x^2 - y", vars, one),
        parse_mpoly("x*y", vars, one),
    };
    const GroebnerBasis<Rat> gb = buchberger(gens, vars.size());
    const MPoly<Rat> f = parse_mpoly("x^3 + y^2", vars, one);
    for (auto _ : state) {
        std::vector<MPoly<Rat>> cof;
        const bool in = ideal_member(f, gb, &cof);
        benchmark::DoNotOptimize(in);
        benchmark::DoNotOptimize(cof.data());
    }
}
BENCHMARK(BM_ideal_member_with_cofactors);

static void BM_char_poly_ring_side(benchmark::State& state) {
    const FPLocalRing<Rat> R = uw_ring();
    const RPoly<Rat> f(std::vector<MPoly<Rat>>{R.variable(1), R.one(), R.one()});
    const RfPresentation<Rat> Rf = build_Rf(R, f);
    const RPoly<Rat> q = RPoly<Rat>::constant(R.variable(0) + R.variable(1));
    for (auto _ : state) {
        const auto g = char_poly(q, Rf.f, R.one());
        benchmark::DoNotOptimize(g.coeffs().data());
    }
}
BENCHMARK(BM_char_poly_ring_side);

BENCHMARK_MAIN();
