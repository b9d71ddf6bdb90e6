// Ground types: arcs realize to the right point sets, families keep their
// invariants, and canonicalization is constant exactly on dihedral orbits.

#include "doctest.h"

#include "katona/circle.hpp"
#include "katona/errors.hpp"

#include <set>

using namespace katona;

TEST_SUITE_BEGIN("circle");

TEST_CASE("arc points wrap around the circle") {
    GroundSet g(6);
    CHECK(arc_points(g, {2, 3}).points() == std::vector<int>{2, 3, 4});
    CHECK(arc_points(g, {5, 3}).points() == std::vector<int>{1, 5, 6});
    CHECK(arc_points(g, {6, 1}).points() == std::vector<int>{6});
    auto ht = arc_head_tail(g, {5, 3});
    CHECK(ht.head == 5);
    CHECK(ht.tail == 1);
    CHECK(arc_head_tail(g, {4, 1}).tail == 4);
}

TEST_CASE("every arc realizes to exactly its length") {
    for (int n : {2, 3, 5, 8, 13}) {
        GroundSet g(n);
        for (int k = 1; k <= n - 1; ++k)
            for (int h = 1; h <= n; ++h)
                CHECK(arc_points(g, {h, k}).size() == k);
    }
}

TEST_CASE("complement of an arc is the complementary arc") {
    GroundSet g(7);
    for (int k = 1; k <= 6; ++k)
        for (int h = 1; h <= 7; ++h) {
            ArcFamily fam(g);
            fam.insert({h, k});
            ArcFamily comp = complement_family(fam);
            CHECK(comp.size() == 1);
            Arc c = comp.arcs().front();
            CHECK(c.len == 7 - k);
            CHECK((arc_bits(g, {h, k}) ^ arc_bits(g, c)) == g.full_mask());
        }
}

TEST_CASE("complement maps full levels onto full levels") {
    GroundSet g(9);
    for (int k = 1; k <= 8; ++k)
        CHECK(complement_family(full_level(g, k)) == full_level(g, 9 - k));
}

TEST_CASE("family bookkeeping: insert, erase, levels") {
    GroundSet g(5);
    ArcFamily fam(g);
    fam.insert({1, 2});
    fam.insert({3, 2});
    fam.insert({1, 4});
    CHECK(fam.size() == 3);
    CHECK(fam.level_size(2) == 2);
    CHECK(fam.level_size(4) == 1);
    CHECK(fam.level_size(3) == 0);
    CHECK(fam.contains({3, 2}));
    CHECK_FALSE(fam.contains({2, 2}));
    fam.insert({3, 2});   // duplicate is a no-op
    CHECK(fam.size() == 3);
    fam.erase({3, 2});
    CHECK(fam.size() == 2);
    CHECK(fam.occupied_levels() == std::vector<int>{2, 4});
    CHECK_THROWS_AS(fam.insert({0, 2}), DomainError);
    CHECK_THROWS_AS(fam.insert({1, 5}), DomainError);
    CHECK_THROWS_AS(fam.insert({6, 1}), DomainError);
}

TEST_CASE("full circle holds n(n-1) arcs") {
    for (int n : {2, 3, 6, 10}) {
        GroundSet g(n);
        CHECK(full_circle(g).size() == n * (n - 1));
        for (int k = 1; k <= n - 1; ++k) CHECK(full_level(g, k).size() == n);
    }
}

TEST_CASE("rotation and reflection are bijections preserving sizes") {
    GroundSet g(7);
    ArcFamily fam(g);
    fam.insert({1, 2});
    fam.insert({4, 3});
    fam.insert({6, 5});
    for (int s = 0; s < 7; ++s) {
        ArcFamily rot = rotate_family(fam, s);
        CHECK(rot.size() == fam.size());
        CHECK(rotate_family(rot, 7 - s) == fam);
    }
    CHECK(reflect_family(reflect_family(fam)) == fam);
}

TEST_CASE("canonical form is constant on orbits and idempotent") {
    GroundSet g(6);
    ArcFamily fam(g);
    fam.insert({2, 2});
    fam.insert({5, 3});
    ArcFamily canon = symmetry_orbit(fam);
    for (int refl = 0; refl < 2; ++refl)
        for (int s = 0; s < 6; ++s) {
            ArcFamily img = refl ? reflect_family(fam) : fam;
            img = rotate_family(img, s);
            CHECK(symmetry_orbit(img) == canon);
        }
    CHECK(symmetry_orbit(canon) == canon);
}

TEST_CASE("rotating a single arc reaches the least head") {
    GroundSet g(5);
    ArcFamily fam(g);
    fam.insert({2, 2});
    ArcFamily canon = symmetry_orbit(fam);
    CHECK(canon.contains({1, 2}));
    CHECK(canon.size() == 1);
}

TEST_CASE("stars at different points share one canonical form") {
    GroundSet g(6);
    ArcFamily a(g), b(g);
    for (int i = 0; i < 3; ++i) {
        a.insert({g.wrap1(4 - i), 3});
        b.insert({g.wrap1(1 - i), 3});
    }
    CHECK(symmetry_orbit(a) == symmetry_orbit(b));
}

TEST_CASE("distinct orbits get distinct canonical forms at n = 5") {
    // Exhaust all 2-arc families; group by orbit with explicit images and
    // confirm the canonical form separates exactly the orbits.
    GroundSet g(5);
    auto key_of = [&](std::uint64_t heads) {
        ArcFamily fam(g);
        fam.insert_level(2, heads);
        auto arcs = symmetry_orbit(fam).arcs();
        std::uint64_t k = 0;
        for (const Arc& a : arcs) k = k << 5 | std::uint64_t(a.head);
        return k;
    };
    for (std::uint64_t x = 0; x < 32; ++x)
        for (std::uint64_t y = 0; y < 32; ++y) {
            bool same_orbit = false;
            for (int refl = 0; refl < 2 && !same_orbit; ++refl)
                for (int s = 0; s < 5 && !same_orbit; ++s) {
                    ArcFamily fam(g);
                    fam.insert_level(2, x);
                    ArcFamily img = refl ? reflect_family(fam) : fam;
                    img = rotate_family(img, s);
                    same_orbit = (img.level_heads(2) == y);
                }
            CHECK((key_of(x) == key_of(y)) == same_orbit);
        }
}

TEST_CASE("set families stay sorted and deduplicated") {
    GroundSet g(5);
    SetFamily fam(g);
    fam.insert_bits(0b10110);
    fam.insert_bits(0b00011);
    fam.insert_bits(0b10110);
    CHECK(fam.size() == 2);
    CHECK(fam.members() == std::vector<std::uint64_t>{0b00011, 0b10110});
    CHECK(fam.contains_bits(0b00011));
    fam.erase_bits(0b00011);
    CHECK(fam.size() == 1);

    SetFamily built = SetFamily::from_sets(g, {{1, 2}, {2, 4, 5}});
    CHECK(built.members() == std::vector<std::uint64_t>{0b00011, 0b11010});
    auto profile = built.level_profile();
    CHECK(profile[2] == 1);
    CHECK(profile[3] == 1);
    int k = 0;
    CHECK_FALSE(built.uniform(&k));
    SetFamily uni = SetFamily::from_sets(g, {{1, 2}, {2, 4}});
    CHECK(uni.uniform(&k));
    CHECK(k == 2);
}

TEST_CASE("ground set bounds") {
    CHECK_THROWS_AS(GroundSet(0), DomainError);
    CHECK_THROWS_AS(GroundSet(64), DomainError);
    CHECK(GroundSet(63).full_mask() == ~std::uint64_t{0} >> 1);
}

TEST_SUITE_END();
