#pragma once
// Combinatorics on a cyclically ordered ground set.
//
// Conventions used everywhere in this library:
//  * The ground set is [n] = {1, .., n} arranged on a circle, position n
//    followed by position 1. Public APIs are 1-based; internally positions
//    map to bits 0..n-1 of a 64-bit word (position p <-> bit p-1), so n is
//    capped at 63.
//  * An arc is a run of consecutive positions (head, head+1, .., head+len-1)
//    taken mod n. Lengths are restricted to 1..n-1: the empty set and the
//    whole circle are never arcs.
//  * An arc family stores, per length k, an n-bit head vector: bit h-1 is
//    set iff the arc of length k with head h belongs to the family. Two arcs
//    with the same head but different lengths are distinct members.
//  * A set family is a plain family of subsets of [n], each stored as one
//    bit word; members are kept sorted and deduplicated.

#include "katona/errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace katona {

struct GroundSet {
    int n = 0;

    GroundSet() = default;
    explicit GroundSet(int n_);   // throws DomainError unless 1 <= n <= 63

    std::uint64_t full_mask() const { return (std::uint64_t{1} << n) - 1; }
    // Wraps an arbitrary 0-based offset into 0..n-1.
    int wrap0(long long pos0) const {
        long long r = pos0 % n;
        return int(r < 0 ? r + n : r);
    }
    // Wraps an arbitrary 1-based position into 1..n.
    int wrap1(long long pos1) const { return wrap0(pos1 - 1) + 1; }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

struct Arc {
    int head = 1;   // 1..n
    int len = 1;    // 1..n-1

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc& a, const Arc& b) {
        if (a.len != b.len) return a.len <=> b.len;
        return a.head <=> b.head;
    }
};

struct PointSet {
    int n = 0;
    std::uint64_t bits = 0;

    PointSet() = default;
    PointSet(const GroundSet& g, std::uint64_t bits_) : n(g.n), bits(bits_) {}

    static PointSet from_points(const GroundSet& g, const std::vector<int>& pts);

    bool contains(int p) const { return (bits >> (p - 1)) & 1; }
    int size() const;
    std::vector<int> points() const;   // sorted, 1-based

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

// The positions covered by an arc, as a bit word over the ground set.
std::uint64_t arc_bits(const GroundSet& g, const Arc& a);
PointSet arc_points(const GroundSet& g, const Arc& a);

// Head and tail position of an arc; tail = head + len - 1 wrapped into 1..n.
// An arc of length 1 has tail == head.
struct HeadTail { int head; int tail; };
HeadTail arc_head_tail(const GroundSet& g, const Arc& a);

class ArcFamily {
public:
    ArcFamily() = default;
    explicit ArcFamily(const GroundSet& g) : ground_(g) {}

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.n; }

    void insert(const Arc& a);            // validates 1<=len<=n-1, 1<=head<=n
    void insert_level(int k, std::uint64_t heads);   // OR a whole head vector in
    bool contains(const Arc& a) const;
    void erase(const Arc& a);

    int size() const;                     // total number of arcs
    bool empty() const { return levels_.empty(); }
    int level_size(int k) const;
    std::uint64_t level_heads(int k) const;           // 0 when level absent
    const std::map<int, std::uint64_t>& levels() const { return levels_; }
    std::vector<int> occupied_levels() const;

    std::vector<Arc> arcs() const;                    // sorted by (len, head)
    std::vector<std::uint64_t> realize_bits() const;  // point sets, family order
    std::vector<PointSet> realize() const;

    friend bool operator==(const ArcFamily&, const ArcFamily&) = default;

private:
    GroundSet ground_;
    std::map<int, std::uint64_t> levels_;   // k -> head vector; empty vectors removed
};

// All n arcs of one length.
ArcFamily full_level(const GroundSet& g, int k);
// All n(n-1) arcs of every length 1..n-1.
ArcFamily full_circle(const GroundSet& g);

// Member-wise set complement. The complement of the arc (h, k) is the arc
// (h + k wrapped, n - k), so this maps level k onto level n-k bijectively.
ArcFamily complement_family(const ArcFamily& fam);

// Image of the family under rotation by `shift` positions (head h -> h+shift).
ArcFamily rotate_family(const ArcFamily& fam, int shift);
// Image under the reflection p -> n+2-p, which fixes position 1.
ArcFamily reflect_family(const ArcFamily& fam);

// Canonical representative of the orbit of `fam` under all n rotations,
// optionally extended by reflections (the dihedral group). The representative
// is the image whose (length, sorted heads) serialization is lexicographically
// least; it is the same for any two families in one orbit, which makes it
// usable as a dedup key for "count configurations up to symmetry".
ArcFamily symmetry_orbit(const ArcFamily& fam, bool with_reflections = true);

class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(const GroundSet& g) : ground_(g) {}

    static SetFamily from_sets(const GroundSet& g,
                               const std::vector<std::vector<int>>& sets);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.n; }

    void insert_bits(std::uint64_t member);   // keeps members sorted + unique
    void insert(const PointSet& ps);
    bool contains_bits(std::uint64_t member) const;
    void erase_bits(std::uint64_t member);

    int size() const { return int(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::uint64_t>& members() const { return members_; }

    // Number of members per cardinality.
    std::map<int, int> level_profile() const;
    // True when every member has cardinality k (true for the empty family
    // only if no k is demanded); `k_out` receives the common size.
    bool uniform(int* k_out = nullptr) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    GroundSet ground_;
    std::vector<std::uint64_t> members_;
};

// Forgets arc structure: the family of covered point sets.
SetFamily realize_sets(const ArcFamily& fam);

} // namespace katona
