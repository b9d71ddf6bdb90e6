// Microbenchmarks for the hot paths: branch-and-bound searches (single-level
// and multi-level), shadow iteration, dihedral canonicalization, exact order
// averaging, and the injection certificate. Sizes are picked so a full run
// stays in the seconds range; they are for watching regressions, not for
// verifying results.

#include <benchmark/benchmark.h>

#include "katona/averaging.hpp"
#include "katona/certificates.hpp"
#include "katona/circle.hpp"
#include "katona/constructions.hpp"
#include "katona/errors.hpp"
#include "katona/operators.hpp"
#include "katona/search.hpp"
#include "katona/theorems.hpp"

#include <cstdint>
#include <random>

using namespace katona;

namespace {

void BM_IntersectingSearch(benchmark::State& state) {
    const int n = int(state.range(0));
    SearchProblem prob;
    prob.ground = GroundSet(n);
    prob.slots = {SlotSpec::single(n / 3 + 1)};
    prob.predicate = {{PredicateId::parse("intersecting"), {0}}};
    for (auto _ : state) {
        SearchReport rep = maximize(prob);
        benchmark::DoNotOptimize(rep.optimum);
    }
}
BENCHMARK(BM_IntersectingSearch)->Arg(8)->Arg(10)->Arg(12);

void BM_AntichainSearch(benchmark::State& state) {
    const int n = int(state.range(0));
    SearchProblem prob;
    prob.ground = GroundSet(n);
    prob.slots = {SlotSpec::all_levels(n)};
    prob.predicate = {{PredicateId::parse("antichain"), {0}}};
    for (auto _ : state) {
        SearchReport rep = maximize(prob);
        benchmark::DoNotOptimize(rep.optimum);
    }
}
BENCHMARK(BM_AntichainSearch)->Arg(5)->Arg(6);

void BM_IntersectingUnionSearch(benchmark::State& state) {
    const int n = int(state.range(0));
    SearchProblem prob;
    prob.ground = GroundSet(n);
    prob.slots = {SlotSpec::all_levels(n)};
    prob.predicate = {{PredicateId::parse("iu"), {0}}};
    for (auto _ : state) {
        SearchReport rep = maximize(prob);
        benchmark::DoNotOptimize(rep.optimum);
    }
}
BENCHMARK(BM_IntersectingUnionSearch)->Arg(6)->Arg(7);

void BM_ShadowIterated(benchmark::State& state) {
    const int n = int(state.range(0));
    GroundSet g(n);
    ArcFamily fam = star_arcs(g, n / 2, 1);
    for (auto _ : state) {
        ArcFamily down = shadow_iterated(fam, 1);
        benchmark::DoNotOptimize(down.size());
    }
}
BENCHMARK(BM_ShadowIterated)->Arg(16)->Arg(32)->Arg(60);

void BM_SymmetryOrbit(benchmark::State& state) {
    const int n = int(state.range(0));
    GroundSet g(n);
    ArcFamily fam = star_arcs(g, n / 2, 1);
    fam.insert({2, 1});
    fam.insert({n - 1, n - 2});
    for (auto _ : state) {
        ArcFamily rep = symmetry_orbit(fam);
        benchmark::DoNotOptimize(rep.size());
    }
}
BENCHMARK(BM_SymmetryOrbit)->Arg(8)->Arg(12)->Arg(16);

void BM_ExactAverage(benchmark::State& state) {
    const int n = int(state.range(0));
    GroundSet g(n);
    SetFamily fam = realize_sets(star_arcs(g, 3, 1));
    for (auto _ : state) {
        AverageReport rep = exact_average(fam, 3);
        benchmark::DoNotOptimize(rep.max_trace);
    }
}
BENCHMARK(BM_ExactAverage)->Arg(6)->Arg(7)->Arg(8);

void BM_ShadowGrowthVerify(benchmark::State& state) {
    const int n = int(state.range(0));
    TheoremParams p;
    p.n = n;
    p.k = n / 2;
    for (auto _ : state) {
        TheoremResult res = verify_bound("circular-kruskal-katona", p);
        benchmark::DoNotOptimize(res.achieved);
    }
}
BENCHMARK(BM_ShadowGrowthVerify)->Arg(8)->Arg(10)->Arg(12);

void BM_InjectionPhi(benchmark::State& state) {
    GroundSet g(8);
    std::mt19937_64 rng(7);
    std::uint64_t keep = 0;
    for (auto _ : state) {
        const std::uint64_t r = rng() & 255, s = rng() & 255, t = rng() & 255;
        try {
            PhiReport rep = injection_phi(g, 3, r, s, t);
            keep ^= rep.r0_mask;
        } catch (const DomainError&) {
            keep ^= 1;
        }
        benchmark::DoNotOptimize(keep);
    }
}
BENCHMARK(BM_InjectionPhi);

} // namespace

BENCHMARK_MAIN();
