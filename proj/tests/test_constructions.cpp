// Named extremal families: closed-form sizes, the defining predicate of
// each construction, and the string constructor used by the CLI.

#include "doctest.h"

#include "katona/constructions.hpp"
#include "katona/predicates.hpp"
#include "katona/rational.hpp"

#include <bit>

using namespace katona;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("star arcs through a point") {
    for (int n : {5, 8}) {
        GroundSet g(n);
        for (int k = 1; k <= n / 2; ++k)
            for (int x : {1, n / 2, n}) {
                ArcFamily fam = star_arcs(g, k, x);
                CHECK(fam.size() == k);
                CHECK(fam.occupied_levels() == std::vector<int>{k});
                for (std::uint64_t m : fam.realize_bits())
                    CHECK(((m >> (x - 1)) & 1) == 1);
                CHECK(is_star(fam));
            }
    }
}

TEST_CASE("three-pencil families are intersecting non-stars of size 3k - n") {
    struct Case { int n, k, p, q; };
    for (Case c : {Case{6, 3, 3, 5}, Case{9, 4, 4, 7}, Case{12, 5, 5, 9},
                   Case{8, 4, 3, 6}}) {
        GroundSet g(c.n);
        ArcFamily fam = m_pq(g, c.k, c.p, c.q);
        CHECK(fam.size() == 3 * c.k - c.n);
        CHECK(fam.occupied_levels() == std::vector<int>{c.k});
        CHECK(is_intersecting(fam));
        if (fam.size() >= 3) CHECK_FALSE(is_star(fam));
        CHECK(m_pq_default(g, c.k) == m_pq(g, c.k, c.k, 2 * c.k - 1));
    }
    GroundSet g10(10);
    CHECK_THROWS_AS(m_pq(g10, 3, 3, 5), DomainError);   // needs n <= 3(k-1)
    GroundSet g6(6);
    CHECK_THROWS_AS(m_pq(g6, 3, 1, 5), DomainError);    // needs p > 1
}

TEST_CASE("full level unions of the cube") {
    GroundSet g(5);
    SetFamily two_three = erdos_levels(g, {2, 3});
    CHECK(two_three.size() == 20);
    CHECK(two_three.level_profile() == std::map<int, int>{{2, 10}, {3, 10}});
    CHECK(longest_chain(MaskView(two_three.members())) == 1);
    CHECK_FALSE(contains_butterfly(MaskView(two_three.members())));

    SetFamily with_ends = erdos_levels(g, {0, 2, 5});
    CHECK(with_ends.size() == 12);
    CHECK(longest_chain(MaskView(with_ends.members())) == 2);
    CHECK_THROWS_AS(erdos_levels(g, {2, 6}), DomainError);
    CHECK_THROWS_AS(erdos_levels(g, {2, 2}), DomainError);
}

TEST_CASE("cube non-star intersecting family has the closed-form size") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {7, 2}, {9, 4}}) {
        GroundSet g(n);
        SetFamily fam = hilton_milner_family(g, k);
        BigInt expect = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
        CHECK(BigInt(fam.size()) == expect);
        int got_k = 0;
        CHECK(fam.uniform(&got_k));
        CHECK(got_k == k);
        CHECK(is_intersecting(MaskView(fam.members())));
        CHECK_FALSE(is_star(MaskView(fam.members())));
    }
    CHECK_THROWS_AS(hilton_milner_family(GroundSet(5), 3), DomainError);
}

TEST_CASE("arcs through one point avoiding another") {
    GroundSet g5(5);
    ArcFamily fam = d_ij(g5, 1, 3);
    CHECK(fam.size() == 6);   // d = 2 positions from 1 to 3, so d(n-d) = 6
    CHECK(is_iu(fam));
    for (std::uint64_t m : fam.realize_bits()) {
        CHECK((m & 1) == 1);           // contains position 1
        CHECK(((m >> 2) & 1) == 0);    // avoids position 3
    }

    GroundSet g6(6);
    CHECK(d_ij(g6, 1, 3).size() == 8);
    CHECK(d_ij(g6, 1, 4).size() == 9);   // antipodal pair maximizes d(n-d)
    CHECK(d_ij(g6, 2, 5).size() == 9);
    CHECK_THROWS_AS(d_ij(g6, 2, 2), DomainError);
}

TEST_CASE("arcs meeting a spread transversal") {
    GroundSet g(9);
    ArcFamily fam = b_k_of_T(g, 3, {1, 4, 7});
    CHECK(fam.size() == 9);
    CHECK(fam.occupied_levels() == std::vector<int>{3});
    CHECK(matching_number(fam) == 3);
    for (std::uint64_t m : fam.realize_bits())
        CHECK((m & (0b001001001)) != 0);
    // Spacing below k: the family still builds (here every 4-arc crosses a
    // gap of width 3), but no |T|*k closed form applies.
    CHECK(b_k_of_T(g, 4, {1, 4, 7}).size() == 9);
    CHECK_THROWS_AS(b_k_of_T(g, 3, {2, 2, 5}), DomainError);   // repeated point
}

TEST_CASE("arcs meeting the two-point transversal") {
    GroundSet g6(6);
    ArcFamily fam6 = b_T2(g6);
    CHECK(fam6.size() == 24);
    CHECK(matching_number(fam6) == 2);
    for (int k = 1; k <= 5; ++k)
        CHECK(fam6.level_size(k) == (2 * k < 6 ? 2 * k : 6));
    std::uint64_t t2 = (std::uint64_t{1} << 2) | (std::uint64_t{1} << 5);   // {3, 6}
    for (std::uint64_t m : fam6.realize_bits()) CHECK((m & t2) != 0);

    CHECK(b_T2(GroundSet(5)).size() == 16);
    CHECK(b_T2(GroundSet(8)).size() == 44);
}

TEST_CASE("all large sets at n = k(s+1) - 1 have matching number s") {
    GroundSet g(8);
    SetFamily fam = kleitman_family(g, 2);   // k = 3
    CHECK(fam.size() == 256 - 1 - 8 - 28);
    for (std::uint64_t m : fam.members()) CHECK(std::popcount(m) >= 3);
    CHECK(matching_number(MaskView(fam.members())) == 2);
    CHECK_THROWS_AS(kleitman_family(g, 3), DomainError);   // 8+1 not divisible by 4
}

TEST_CASE("k-sets meeting a prefix window") {
    GroundSet g(8);
    SetFamily fam = l_family(g, 2, 3);
    CHECK(BigInt(fam.size()) == binomial(8, 2) - binomial(5, 2));
    CHECK(matching_number(MaskView(fam.members())) == 3);
    for (std::uint64_t m : fam.members()) CHECK((m & 0b111) != 0);
    CHECK_THROWS_AS(l_family(g, 3, 3), DomainError);   // needs n >= k(r+1)
}

TEST_CASE("complete uniform family on the tight ground set") {
    SetFamily fam = complete_k_uniform(2, 2);
    CHECK(fam.n() == 5);
    CHECK(BigInt(fam.size()) == binomial(5, 2));
    CHECK(matching_number(MaskView(fam.members())) == 2);
}

TEST_CASE("pencil extensions partition the circle with two flanking arcs") {
    GroundSet g(8);   // k = 3, n = 3k - 1
    SetFamily fam = pencil_extension_family(g, 3);
    CHECK(fam.size() == 8);
    int k_out = 0;
    CHECK(fam.uniform(&k_out));
    CHECK(k_out == 4);
    for (int i = 1; i <= 8; ++i) {
        std::uint64_t bits = pencil_extension_bits(g, 3, i);
        CHECK(fam.contains_bits(bits));
        std::uint64_t left = arc_bits(g, {g.wrap1(i - 3 + 1), 2});
        std::uint64_t right = arc_bits(g, {g.wrap1(i + 3), 2});
        CHECK((bits | left | right) == g.full_mask());
        CHECK((bits & left) == 0);
        CHECK((bits & right) == 0);
        CHECK((left & right) == 0);
    }
    CHECK_THROWS_AS(pencil_extension_family(g, 2), DomainError);   // n != 3k-1
}

TEST_CASE("string constructors round-trip the catalogue") {
    Construction a = build_construction("m_pq:6,3,3,5");
    REQUIRE(std::holds_alternative<ArcFamily>(a));
    CHECK(std::get<ArcFamily>(a).size() == 3);

    Construction b = build_construction("b_k_of_T:9,3,1+4+7");
    REQUIRE(std::holds_alternative<ArcFamily>(b));
    CHECK(std::get<ArcFamily>(b).size() == 9);

    Construction c = build_construction("erdos_levels:5,2+3");
    REQUIRE(std::holds_alternative<SetFamily>(c));
    CHECK(std::get<SetFamily>(c).size() == 20);

    Construction d = build_construction("star_arcs:7,3,1");
    REQUIRE(std::holds_alternative<ArcFamily>(d));
    CHECK(std::get<ArcFamily>(d) == star_arcs(GroundSet(7), 3, 1));

    Construction e = build_construction("m_pq:6,3");   // default p = k, q = 2k-1
    REQUIRE(std::holds_alternative<ArcFamily>(e));
    CHECK(std::get<ArcFamily>(e) == m_pq_default(GroundSet(6), 3));

    CHECK_THROWS_AS(build_construction("no_such_thing:3"), DomainError);
    CHECK_THROWS_AS(build_construction("m_pq:6,3,3"), DomainError);
    CHECK_THROWS_AS(build_construction("m_pq:6,3,3,five"), DomainError);

    CHECK_FALSE(construction_usage().empty());
}

TEST_SUITE_END();
