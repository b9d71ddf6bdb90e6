#pragma once
// Constructive certificates. Each routine here builds an explicit witness
// object (a decomposition, an injection, a system of rotating partitions)
// whose existence implies a counting bound, and verifies every claimed
// property of the witness on the concrete input instead of assuming it.
// Violated preconditions raise DomainError; a witness that fails its own
// postcondition raises PropertyViolation, since that means the construction
// logic itself is broken.

#include "katona/circle.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace katona {

// Decomposition of a butterfly-free family into minimal members, maximal
// members, and the rest. Butterfly-freeness forces every non-minimal,
// non-maximal member Q to sit above exactly one member and below exactly
// one member; those unique neighbours are recorded as links. The returned
// classes satisfy: each is an antichain, minimal/maximal classes may
// overlap, and the counting consequences
//   2*|minimal| + |rest| <= 2n   and   2*|maximal| + |rest| <= 2n
// hold; all of this is asserted before returning.
struct ButterflyLink {
    Arc member;       // the middle member
    Arc below;        // its unique strictly contained neighbour
    Arc above;        // its unique strictly containing neighbour
};
struct ButterflyDecomposition {
    ArcFamily minimal;
    ArcFamily rest;
    ArcFamily maximal;
    std::vector<ButterflyLink> links;   // one per member of rest, sorted
};
ButterflyDecomposition butterfly_decompose(const ArcFamily& fam);

// Injection certificate for the two-level-plus-pencils trace bound at
// n = 3k-1. The input is a membership over three length-n orbits: the
// (k-1)-arcs, the k-arcs, and the pencil sets (k-arc plus the single
// point that its two flanking (k-1)-arcs leave uncovered). Heads and
// pencil indices are passed as n-bit masks, bit i-1 for index i.
//
// Requires that no three pairwise disjoint members of the given family
// partition the circle. Under that hypothesis the routine constructs, for
// R = {i : (k-1)-arc i present}, an injection from R into the complement
// index sets S = {i : k-arc i absent} and T = {i : pencil i absent}:
//   - i with i-k also in R maps to the pencil at i+k-1, the unique set
//     completing {(k-1)-arc i, (k-1)-arc i-k} to a partition;
//   - otherwise {(k-1)-arc i, k-arc i-k, k-arc i+k-1} partition the
//     circle, so one of the two k-arcs is absent; the one at i-k is
//     preferred, the one at i+k-1 is the fallback.
// Injectivity, |R| <= |S| + |T|, and the resulting trace bound
// (present members across the three orbits <= 2n) are all re-verified.
struct PhiEntry {
    int index;        // element of R, 1..n
    bool to_pencil;   // true: target is an absent pencil, false: absent k-arc
    int target;       // 1..n
};
struct PhiReport {
    std::uint64_t r_mask = 0, r0_mask = 0, r1_mask = 0;
    std::uint64_t s_mask = 0, t_mask = 0;
    std::vector<PhiEntry> mapping;   // sorted by index
    int trace = 0;                   // present members over the three orbits
    int trace_bound = 0;             // 2n
};
PhiReport injection_phi(const GroundSet& g, int k,
                        std::uint64_t small_arc_heads,
                        std::uint64_t k_arc_heads,
                        std::uint64_t pencil_present);

// Rotating-partition certificate. A composition k_1 + .. + k_p = n cuts
// the circle into p consecutive arcs; rotating the cut through all n
// start positions and counting how many of the p arcs lie in the family
// yields n counts whose total equals the multiplicity-weighted sum of the
// family's level sizes over the composition. When the family has matching
// number at most r every count is at most r, which proves
//   sum over composition entries of level_size(k_i)  <=  r * n.
// The routine reports the counts; `ok` says whether all are within r.
// A count above r is not an error: it exhibits r+1 pairwise disjoint
// members and thus certifies matching number > r.
struct RotatingPartitionReport {
    bool ok = false;
    std::vector<int> rotation_counts;    // one per start position 1..n
    long long weighted_level_sum = 0;    // recomputed independently
    long long bound = 0;                 // r * n
};
RotatingPartitionReport rotating_partition_check(const ArcFamily& fam,
                                                 const std::vector<int>& composition,
                                                 int r);

// Disjoint-group decomposition behind the single-level matching bound.
// Input: a family of exactly k*(r+1) arcs, all of one length k. Sorting
// the heads and taking every k-th one, starting from offset j, yields k
// groups of r+1 arcs each; consecutive picked heads are at least k apart,
// so each group consists of pairwise disjoint arcs (asserted). Any
// subfamily with matching number at most r meets each group in at most r
// arcs, hence has size at most k*r.
std::vector<std::vector<Arc>> decompose_into_disjoint_groups(const ArcFamily& fam,
                                                             int r);

// Triple systems splitting n into three distinct parts. Produces pairwise
// disjoint triples of integers from [1, floor(n/2)], each summing to n,
// which together cover every integer strictly between n/3 and n/2. The
// shape depends on the parity of n and of the count of integers in
// [ceil(n/3), floor(n/2)], reported as case_label 'a', 'b' or 'c'. In
// case 'c' the value (n-1)/2 is covered not by a triple but by the
// composition ((n-1)/2, (n-1)/2, 1), returned separately because its
// parts are not distinct.
struct PartitionTriples {
    char case_label = 'a';
    std::vector<std::array<int, 3>> triples;
    std::optional<std::array<int, 3>> repeat_composition;
};
PartitionTriples partition_triples(int n);   // requires n >= 3

// Exhaustive study of intersecting non-star families of k-arcs.
// Enumerates every subfamily of the n arcs of length k (so n is capped at
// 24), keeps the intersecting ones with no common element, and reports:
// whether any exist (they do exactly when k >= 2 and n <= 3(k-1)), the
// maximum size together with all extremal families up to symmetry, whether
// every intersecting non-star family contains three members with empty
// intersection, and whether every admissible three-pencil construction
// attains the maximum. Requires n >= 2k > 1.
struct NonStarReport {
    bool exists = false;
    int max_size = 0;                    // 0 when none exist
    int bound = 0;                       // 3k - n, clamped at 0
    std::vector<ArcFamily> witnesses;    // canonical forms, sorted
    bool all_nonstar_have_empty_triple = true;
    bool construction_attains = true;    // vacuously true when none admissible
};
NonStarReport hilton_milner_circle_check(const GroundSet& g, int k);

} // namespace katona
