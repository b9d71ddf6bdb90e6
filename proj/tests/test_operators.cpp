// Shadow and shade operators against brute-force containment oracles, the
// size identity |boundary| = |B| + run count, complement duality, and the
// antichain lift.

#include "doctest.h"

#include "katona/operators.hpp"
#include "katona/predicates.hpp"

#include <algorithm>
#include <bit>
#include <random>

using namespace katona;

namespace {

ArcFamily level_family(const GroundSet& g, int k, std::uint64_t heads) {
    ArcFamily fam(g);
    fam.insert_level(k, heads);
    return fam;
}

// Arcs of length `to` comparable with some member: contained in one when
// shrinking, containing one when growing. Definitional, no head arithmetic.
ArcFamily oracle_sigma(const ArcFamily& fam, int k, int to) {
    const GroundSet& g = fam.ground();
    ArcFamily out(g);
    for (int h = 1; h <= g.n; ++h) {
        std::uint64_t cand = arc_bits(g, {h, to});
        for (int m = 1; m <= g.n; ++m) {
            if (!((fam.level_heads(k) >> (m - 1)) & 1)) continue;
            std::uint64_t mem = arc_bits(g, {m, k});
            bool cmp = to <= k ? (cand & ~mem) == 0 : (mem & ~cand) == 0;
            if (cmp) {
                out.insert({h, to});
                break;
            }
        }
    }
    return out;
}

int oracle_lambda(const GroundSet& g, std::uint64_t heads) {
    int runs = 0;
    for (int h = 1; h <= g.n; ++h) {
        bool cur = (heads >> (h - 1)) & 1;
        bool prev = (heads >> (g.wrap1(h - 1) - 1)) & 1;
        if (cur && !prev) ++runs;
    }
    return runs;
}

} // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("one-step shade and shadow match the containment oracle") {
    for (int n : {4, 6, 7}) {
        GroundSet g(n);
        for (int k = 1; k <= n - 1; ++k)
            for (std::uint64_t heads = 1; heads < (std::uint64_t{1} << n); ++heads) {
                ArcFamily fam = level_family(g, k, heads);
                if (k <= n - 2) CHECK(shade_immediate(fam) == oracle_sigma(fam, k, k + 1));
                if (k >= 2) CHECK(shadow_immediate(fam) == oracle_sigma(fam, k, k - 1));
            }
    }
}

TEST_CASE("boundary size equals size plus head run count") {
    for (int n : {5, 6, 8}) {
        GroundSet g(n);
        for (int k = 1; k <= n - 1; ++k)
            for (std::uint64_t heads = 1; heads < g.full_mask(); ++heads) {
                ArcFamily fam = level_family(g, k, heads);
                int expect = std::popcount(heads) + oracle_lambda(g, heads);
                if (k <= n - 2) CHECK(shade_immediate(fam).size() == expect);
                if (k >= 2) CHECK(shadow_immediate(fam).size() == expect);
            }
    }
}

TEST_CASE("shade and shadow are complement duals") {
    GroundSet g(7);
    for (int k = 1; k <= 5; ++k)
        for (std::uint64_t heads = 1; heads < (std::uint64_t{1} << 7); ++heads) {
            ArcFamily fam = level_family(g, k, heads);
            CHECK(complement_family(shade_immediate(fam)) ==
                  shadow_immediate(complement_family(fam)));
        }
}

TEST_CASE("iterated sigma matches the oracle and its size lower bound") {
    for (int n : {5, 7}) {
        GroundSet g(n);
        for (int k = 1; k <= n - 1; ++k)
            for (std::uint64_t heads = 1; heads < (std::uint64_t{1} << n); ++heads) {
                ArcFamily fam = level_family(g, k, heads);
                for (int l = 1; l <= n - 1; ++l) {
                    ArcFamily img = shadow_iterated(fam, l);
                    CHECK(img == oracle_sigma(fam, k, l));
                    CHECK(img.level_size(l) >=
                          std::min(n, std::popcount(heads) + std::abs(l - k)));
                }
            }
    }
}

TEST_CASE("iterated sigma at the home level is the identity") {
    GroundSet g(6);
    ArcFamily fam = level_family(g, 3, 0b010110);
    CHECK(shadow_iterated(fam, 3) == fam);
}

TEST_CASE("component profile lists the circular head runs") {
    GroundSet g(8);
    ArcFamily fam = level_family(g, 3, 0b10110011);   // heads 1,2,5,6,8
    ComponentProfile prof = lambda_components(fam);
    CHECK(prof.lambda == 2);   // runs 8,1,2 and 5,6 wrap into two components
    REQUIRE(prof.runs.size() == 2);
    CHECK(prof.runs[0].start == 5);
    CHECK(prof.runs[0].length == 2);
    CHECK(prof.runs[1].start == 8);
    CHECK(prof.runs[1].length == 3);

    for (std::uint64_t heads = 1; heads < g.full_mask(); ++heads) {
        ComponentProfile p = lambda_components(level_family(g, 2, heads));
        CHECK(p.lambda == oracle_lambda(g, heads));
        int covered = 0;
        for (const HeadRun& r : p.runs) {
            covered += r.length;
            for (int i = 0; i < r.length; ++i)
                CHECK(((heads >> (g.wrap1(r.start + i) - 1)) & 1) == 1);
        }
        CHECK(covered == std::popcount(heads));
    }
}

TEST_CASE("operator domain errors") {
    GroundSet g(5);
    ArcFamily empty(g);
    CHECK_THROWS_AS(shade_immediate(empty), DomainError);
    CHECK_THROWS_AS(shadow_immediate(empty), DomainError);
    CHECK_THROWS_AS(lambda_components(empty), DomainError);
    CHECK_THROWS_AS(lambda_components(full_level(g, 2)), DomainError);
    CHECK_THROWS_AS(shade_immediate(full_level(g, 4)), DomainError);
    CHECK_THROWS_AS(shadow_immediate(full_level(g, 1)), DomainError);
    ArcFamily two(g);
    two.insert({1, 2});
    two.insert({1, 3});
    CHECK_THROWS_AS(shade_immediate(two), DomainError);
    CHECK_THROWS_AS(shadow_iterated(level_family(g, 2, 1), 5), DomainError);
    CHECK_THROWS_AS(shadow_iterated(level_family(g, 2, 1), 0), DomainError);
}

TEST_CASE("cube shade and shadow match the containment oracle") {
    GroundSet g4(4);
    auto check_both = [](const GroundSet& g, const SetFamily& fam, int k) {
        auto comparable = [&](int to) {
            SetFamily out(g);
            for (std::uint64_t cand = 0; cand <= g.full_mask(); ++cand) {
                if (std::popcount(cand) != to) continue;
                for (std::uint64_t mem : fam.members()) {
                    bool cmp = to < k ? (cand & ~mem) == 0 : (mem & ~cand) == 0;
                    if (cmp) {
                        out.insert_bits(cand);
                        break;
                    }
                }
            }
            return out;
        };
        if (k + 1 <= g.n) CHECK(set_shade(fam) == comparable(k + 1));
        if (k >= 1) CHECK(set_shadow(fam) == comparable(k - 1));
    };

    for (int k = 0; k <= 4; ++k) {
        std::vector<std::uint64_t> level;
        for (std::uint64_t m = 0; m <= g4.full_mask(); ++m)
            if (std::popcount(m) == k) level.push_back(m);
        for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << level.size()); ++sel) {
            SetFamily fam(g4);
            for (std::size_t i = 0; i < level.size(); ++i)
                if ((sel >> i) & 1) fam.insert_bits(level[i]);
            check_both(g4, fam, k);
        }
    }

    GroundSet g6(6);
    std::mt19937_64 rng(20260822);
    for (int k = 1; k <= 5; ++k) {
        std::vector<std::uint64_t> level;
        for (std::uint64_t m = 0; m <= g6.full_mask(); ++m)
            if (std::popcount(m) == k) level.push_back(m);
        for (int trial = 0; trial < 25; ++trial) {
            SetFamily fam(g6);
            for (std::uint64_t m : level)
                if (rng() & 1) fam.insert_bits(m);
            if (fam.empty()) fam.insert_bits(level[rng() % level.size()]);
            check_both(g6, fam, k);
        }
    }
}

TEST_CASE("cube operator domain errors") {
    GroundSet g(4);
    SetFamily mixed = SetFamily::from_sets(g, {{1}, {1, 2}});
    CHECK_THROWS_AS(set_shade(mixed), DomainError);
    CHECK_THROWS_AS(set_shadow(mixed), DomainError);
    SetFamily top(g);
    top.insert_bits(g.full_mask());
    CHECK_THROWS_AS(set_shade(top), DomainError);
    SetFamily bottom(g);
    bottom.insert_bits(0);
    CHECK_THROWS_AS(set_shadow(bottom), DomainError);
    CHECK_THROWS_AS(set_shade(SetFamily(g)), DomainError);
}

TEST_CASE("lift replaces the bottom level by its shade") {
    GroundSet g(5);
    SetFamily fam = SetFamily::from_sets(g, {{1, 2}, {1, 3, 4, 5}});
    SetFamily lifted = sperner_lift(fam);
    SetFamily expect =
        SetFamily::from_sets(g, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4, 5}});
    CHECK(lifted == expect);
    CHECK(is_antichain(MaskView(lifted.members())));

    // A full level lifts to the next full level.
    SetFamily level2(g);
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
        if (std::popcount(m) == 2) level2.insert_bits(m);
    CHECK(sperner_lift(level2).level_profile() == std::map<int, int>{{3, 10}});
}

TEST_CASE("repeated lifts climb to the top and stay antichains") {
    GroundSet g(5);
    SetFamily fam = SetFamily::from_sets(g, {{1}, {2, 3}, {3, 4, 5}});
    int steps = 0;
    for (;;) {
        CHECK(is_antichain(MaskView(fam.members())));
        try {
            fam = sperner_lift(fam);
        } catch (const DomainError&) {
            break;
        }
        REQUIRE(++steps <= 5);
    }
    CHECK(fam.members() == std::vector<std::uint64_t>{g.full_mask()});
}

TEST_CASE("lift rejects bad inputs and failed property checks") {
    GroundSet g(5);
    CHECK_THROWS_AS(sperner_lift(SetFamily(g)), DomainError);
    SetFamily chain = SetFamily::from_sets(g, {{1}, {1, 2}});
    CHECK_THROWS_AS(sperner_lift(chain), DomainError);
    SetFamily top(g);
    top.insert_bits(g.full_mask());
    CHECK_THROWS_AS(sperner_lift(top), DomainError);

    SetFamily ok = SetFamily::from_sets(g, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(
        sperner_lift_checked(
            ok, [](const SetFamily& f) { return f.size() > 100; }, "too big"),
        PropertyViolation);
    SetFamily same = sperner_lift_checked(
        ok, [](const SetFamily& f) { return !f.empty(); }, "non-empty");
    CHECK(same == sperner_lift(ok));
}

TEST_SUITE_END();
