// Averaging over cyclic orders: the exact average equals |F| / C(n,k), the
// lift identity, LYM sums in all three modes, and the seeded Monte Carlo
// estimator.

#include "doctest.h"

#include "katona/averaging.hpp"
#include "katona/constructions.hpp"

#include <bit>
#include <random>
#include <set>

using namespace katona;

namespace {

SetFamily random_uniform(const GroundSet& g, int k, int count, std::mt19937_64& rng) {
    std::vector<std::uint64_t> level;
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
        if (std::popcount(m) == k) level.push_back(m);
    SetFamily fam(g);
    while (fam.size() < count && fam.size() < int(level.size()))
        fam.insert_bits(level[rng() % level.size()]);
    return fam;
}

} // namespace

TEST_SUITE_BEGIN("averaging");

TEST_CASE("order enumeration pins element 1 and visits (n-1)! arrangements") {
    GroundSet g(4);
    std::set<std::vector<int>> seen;
    for_each_cyclic_order(g, [&](const CyclicOrder& o) {
        CHECK(o.arrangement.size() == 4);
        CHECK(o.arrangement[0] == 1);
        seen.insert(o.arrangement);
    });
    CHECK(seen.size() == 6);
    CHECK_THROWS_AS(for_each_cyclic_order(GroundSet(12), [](const CyclicOrder&) {}),
                    DomainError);
}

TEST_CASE("order validation") {
    GroundSet g(4);
    CHECK(CyclicOrder::identity(g).arrangement == std::vector<int>{1, 2, 3, 4});
    CHECK_NOTHROW(CyclicOrder::from_arrangement(g, {1, 3, 2, 4}));
    CHECK_THROWS_AS(CyclicOrder::from_arrangement(g, {2, 1, 3, 4}), DomainError);
    CHECK_THROWS_AS(CyclicOrder::from_arrangement(g, {1, 2, 2, 4}), DomainError);
    CHECK_THROWS_AS(CyclicOrder::from_arrangement(g, {1, 2, 3}), DomainError);
}

TEST_CASE("trace counts members appearing as arcs of the rearranged circle") {
    GroundSet g(4);
    SetFamily fam = SetFamily::from_sets(g, {{1, 2}, {2, 3}});
    CHECK(trace(fam, CyclicOrder::identity(g), 2) == 2);
    CHECK(trace(fam, CyclicOrder::from_arrangement(g, {1, 3, 2, 4}), 2) == 1);
    CHECK(trace(fam, CyclicOrder::identity(g), 3) == 0);

    ArcFamily arcs(g);
    arcs.insert({1, 2});
    arcs.insert({2, 2});
    CHECK(trace(arcs, CyclicOrder::identity(g), 2) == 2);
    CHECK(trace_all_levels(arcs, CyclicOrder::identity(g)) == 2);

    SetFamily mixed = SetFamily::from_sets(g, {{1, 2}, {2, 3, 4}});
    CHECK(trace_all_levels(mixed, CyclicOrder::identity(g)) ==
          trace(mixed, CyclicOrder::identity(g), 1) +
              trace(mixed, CyclicOrder::identity(g), 2) +
              trace(mixed, CyclicOrder::identity(g), 3));
}

TEST_CASE("exact average equals family size over the binomial") {
    std::mt19937_64 rng(77);
    for (int n : {5, 6}) {
        GroundSet g(n);
        for (int k = 1; k <= n - 1; ++k)
            for (int trial = 0; trial < 4; ++trial) {
                int count = 1 + int(rng() % 8);
                SetFamily fam = random_uniform(g, k, count, rng);
                AverageReport rep = exact_average(fam, k);
                CHECK(rep.average == Rational(fam.size()) / binomial(n, k));
                CHECK(rep.order_count == factorial(n - 1));
                CHECK(trace(fam, rep.argmax, k) == rep.max_trace);
                CHECK(Rational(rep.max_trace) >= rep.average * n);
            }
    }
}

TEST_CASE("the full level averages to one and traces to n everywhere") {
    GroundSet g(5);
    SetFamily full = erdos_levels(g, {2});
    AverageReport rep = exact_average(full, 2);
    CHECK(rep.average == 1);
    CHECK(rep.max_trace == 5);
}

TEST_CASE("exact average rejects bad input") {
    GroundSet g(5);
    SetFamily mixed = SetFamily::from_sets(g, {{1}, {1, 2}});
    CHECK_THROWS_AS(exact_average(mixed, 1), DomainError);
    SetFamily ok = SetFamily::from_sets(g, {{1, 2}});
    CHECK_THROWS_AS(exact_average(ok, 3), DomainError);   // members are not 3-sets
    SetFamily big = SetFamily::from_sets(GroundSet(12), {{1, 2}});
    CHECK_THROWS_AS(exact_average(big, 2), DomainError);  // beyond the order limit
}

TEST_CASE("lifting the per-circle bound recovers cube counts") {
    CHECK(lift_bound(Rational(3), 8, 3) == binomial(7, 2));
    CHECK(lift_bound(Rational(5), 10, 5) == binomial(9, 4));
    CHECK(lift_bound(Rational(7), 7, 2) == Rational(21));   // 7/7 * C(7,2)
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            CHECK(lift_bound(Rational(k), n, k) == binomial(n - 1, k - 1));
}

TEST_CASE("level mass sums in all three modes") {
    GroundSet g(5);
    SetFamily fam = erdos_levels(g, {2, 3});
    CHECK(lym_sum(fam, LymMode::Standard) == 2);
    CHECK(lym_sum(fam, LymMode::Shifted) == Rational(5, 2) + Rational(5, 3));
    CHECK(lym_sum(fam, LymMode::Circle) == 4);   // 20 members / n

    SetFamily antichain = SetFamily::from_sets(g, {{1, 2}, {3, 4, 5}});
    CHECK(lym_sum(antichain, LymMode::Standard) ==
          Rational(1, 10) + Rational(1, 10));
    CHECK(lym_sum(antichain, LymMode::Shifted) == Rational(1, 4) + Rational(1, 6));

    SetFamily with_full(g);
    with_full.insert_bits(g.full_mask());
    CHECK_THROWS_AS(lym_sum(with_full, LymMode::Standard), DomainError);
    CHECK(lym_sum(with_full, LymMode::Shifted) == 1);   // 1 / C(4,4)
    SetFamily with_empty(g);
    with_empty.insert_bits(0);
    CHECK_THROWS_AS(lym_sum(with_empty, LymMode::Standard), DomainError);
    CHECK_THROWS_AS(lym_sum(with_empty, LymMode::Shifted), DomainError);
    CHECK_THROWS_AS(lym_sum(with_full, LymMode::Circle), DomainError);
}

TEST_CASE("sampling is deterministic per seed and targets the exact value") {
    GroundSet g(12);
    std::mt19937_64 rng(123);
    SetFamily fam = random_uniform(g, 4, 40, rng);

    SampleReport a = sample_average(fam, 4, 500, 42);
    SampleReport b = sample_average(fam, 4, 500, 42);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    CHECK(a.trials == 500);
    CHECK(a.exact_target == Rational(fam.size()) / binomial(12, 4));
    CHECK(a.std_error >= 0.0);

    SampleReport c = sample_average(fam, 4, 500, 43);
    CHECK(c.estimate != a.estimate);   // different seed, different draw

    // Small case where the exact value is enumerable: the estimate of a
    // full level is exactly 1 on every draw.
    GroundSet g5(5);
    SetFamily full = erdos_levels(g5, {2});
    SampleReport d = sample_average(full, 2, 50, 7);
    CHECK(d.estimate == 1);
    CHECK(d.std_error == 0.0);
}

TEST_SUITE_END();
