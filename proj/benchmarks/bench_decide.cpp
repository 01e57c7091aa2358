#include <benchmark/benchmark.h>

#include <hensel/decide.hpp>
#include <hensel/setup.hpp>
#include <hensel/square.hpp>

using namespace hensel;

namespace {

RPoly<Rat> nagata_f(const FPLocalRing<Rat>& R, size_t wrt_var) {
    // X^2 + X + w: constant term in the maximal ideal, linear term a unit.
    return RPoly<Rat>(std::vector<MPoly<Rat>>{R.variable(wrt_var), R.one(), R.one()});
}

}  // namespace

static void BM_square_build_and_validate(benchmark::State& state) {
    for (auto _ : state) {
        CatalogueSetup s = catalogue_reduced_Quw();
        const RPoly<Rat> f = nagata_f(s.ring(), 1);
        CommutingSquare sq(std::move(s), f);
        benchmark::DoNotOptimize(&sq);
    }
}
BENCHMARK(BM_square_build_and_validate);

static void BM_decide_in_Sf(benchmark::State& state) {
    CatalogueSetup s = catalogue_domain_Qw();
    const RPoly<Rat> f = nagata_f(s.ring(), 0);
    const RPoly<Rat> q = RPoly<Rat>::constant(s.ring().variable(0));
    CommutingSquare sq(std::move(s), f);
    for (auto _ : state) {
        const auto d = kernel_decide(q, sq);
        benchmark::DoNotOptimize(&d);
    }
}
BENCHMARK(BM_decide_in_Sf);

static void BM_decide_nilpotent_witness(benchmark::State& state) {
    CatalogueSetup s = catalogue_reduced_Quw();
    const RPoly<Rat> f = nagata_f(s.ring(), 1);
    const RPoly<Rat> q = RPoly<Rat>::constant(s.ring().variable(0));
    CommutingSquare sq(std::move(s), f);
    for (auto _ : state) {
        const auto d = kernel_decide(q, sq);
        benchmark::DoNotOptimize(&d);
    }
}
BENCHMARK(BM_decide_nilpotent_witness);

static void BM_verify_decision_replay(benchmark::State& state) {
    CatalogueSetup s = catalogue_reduced_Quw();
    const RPoly<Rat> f = nagata_f(s.ring(), 1);
    const RPoly<Rat> q = RPoly<Rat>::constant(s.ring().variable(0));
    CommutingSquare sq(std::move(s), f);
    const auto d = kernel_decide(q, sq);
    for (auto _ : state) {
        const bool ok = verify_decision(d, sq);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_verify_decision_replay);

BENCHMARK_MAIN();
