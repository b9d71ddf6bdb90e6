#pragma once
// Family predicates. Everything operates on realized point sets (bit words),
// so arc families and plain set families share one implementation; the
// ArcFamily overloads realize members first.
//
// Tuple conventions: s-wise predicates quantify over s-tuples WITH
// repetition, so a family is s-wise intersecting iff every subset of at most
// s distinct members has a common element. Cross predicates quantify over
// transversal tuples picking one member from each listed family; a tuple
// with an empty slot has no transversals and the condition holds vacuously.
//
// Every predicate here is closed under taking subfamilies (for cross
// predicates: under shrinking any slot). That declared direction is what
// makes prune-on-violation search sound; the tests re-check it exhaustively
// at small n.

#include "katona/circle.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace katona {

using MaskView = std::span<const std::uint64_t>;

bool is_intersecting(MaskView fam);
bool is_s_wise_intersecting(MaskView fam, int s);
bool is_r_wise_union(const GroundSet& g, MaskView fam, int r);
bool are_cross_intersecting(const std::vector<MaskView>& fams);
bool are_cross_union(const GroundSet& g, const std::vector<MaskView>& fams);
// Every s-subset of the q >= s listed families is cross-intersecting.
bool is_s_wise_cross_intersecting(const std::vector<MaskView>& fams, int s);

bool is_antichain(MaskView fam);
// Maximum l such that some chain R_0 < R_1 < .. < R_l of strictly nested
// members exists; a lone member gives 0, the empty family -1.
int longest_chain(MaskView fam);
// No chain of length l, i.e. no l+1 strictly nested members.
bool is_chain_free(MaskView fam, int l);

// Four distinct members E, F, G, H with (E union F) inside (G meet H).
// Three-plus-one chains qualify.
bool contains_butterfly(MaskView fam);

// Common element of all members; empty family counts as a star.
bool is_star(MaskView fam);
std::optional<int> star_center(MaskView fam);

// Maximum number of pairwise disjoint members, exact. A family containing
// the empty set has no finite matching number here: domain error.
int matching_number(MaskView fam);

// No two members (a member with itself included) are disjoint or cover [n].
bool is_iu(const GroundSet& g, MaskView fam);
// Weakening: each pair either behaves as above or is an exact complement pair.
bool satisfies_gronau(const GroundSet& g, MaskView fam);

// ArcFamily conveniences.
bool is_intersecting(const ArcFamily& fam);
bool is_s_wise_intersecting(const ArcFamily& fam, int s);
bool is_r_wise_union(const ArcFamily& fam, int r);
bool is_antichain(const ArcFamily& fam);
int longest_chain(const ArcFamily& fam);
bool contains_butterfly(const ArcFamily& fam);
bool is_star(const ArcFamily& fam);
int matching_number(const ArcFamily& fam);
bool is_iu(const ArcFamily& fam);
bool satisfies_gronau(const ArcFamily& fam);

// Stable predicate names, used by the CLI and by search problem files:
//   "intersecting", "s-wise-intersecting:3", "r-wise-union:2",
//   "cross-intersecting", "cross-union", "s-wise-cross-intersecting:2",
//   "antichain", "chain-free:2", "butterfly-free", "star", "iu", "gronau",
//   "matching-at-most:2"
enum class PredicateTag {
    Intersecting,
    SWiseIntersecting,
    RWiseUnion,
    CrossIntersecting,
    CrossUnion,
    SWiseCrossIntersecting,
    Antichain,
    ChainFree,
    ButterflyFree,
    Star,
    Iu,
    Gronau,
    MatchingAtMost,
};

struct PredicateId {
    PredicateTag tag = PredicateTag::Intersecting;
    int param = 0;   // s, r, or l where the tag takes one

    std::string to_string() const;
    static PredicateId parse(std::string_view text);   // throws DomainError

    bool takes_param() const;
    // True for predicates over a tuple of families rather than a single one.
    bool joint() const;
    // Declared hereditary direction: closed under shrinking. True for every
    // tag here; the declaration exists so search can insist on it.
    bool anti_monotone() const { return true; }

    friend bool operator==(const PredicateId&, const PredicateId&) = default;
};

// Uniform entry point: evaluates the predicate on a tuple of realized
// families. Single-family predicates require exactly one entry; cross
// predicates at least two (at least s for the s-wise cross form).
bool evaluate_predicate(const PredicateId& id, const GroundSet& g,
                        const std::vector<std::vector<std::uint64_t>>& fams);

} // namespace katona
