#pragma once
// Exact maximization of weighted family sizes over arc families on one
// circle, under a conjunction of hereditary predicates.
//
// A problem holds one or more slots, each a set of admissible arc lengths.
// The search assigns every candidate arc to be in or out of each slot
// (slots tied into a nested chain decide a membership depth instead, which
// keeps "B_2 inside B_1" structural rather than a predicate). Every listed
// predicate must be closed under shrinking families; that is validated up
// front and is what makes prune-on-violation exact rather than heuristic.
//
// The optimum is exact. Witnesses are ALL optimal configurations up to
// rotation and reflection, found by branch-and-bound that only discards a
// branch when its upper bound is strictly below the incumbent, and reduced
// to canonical orbit representatives afterwards. Reported witnesses are
// re-verified against the plain predicate evaluators before returning.
//
// Optional per-level and per-head caps tighten the bound-based pruning.
// A cap asserts "no feasible slot content has more than `cap` arcs of this
// level (resp. sharing one head)"; callers must only pass caps that are
// theorems for the predicate set in play, which the registry layer does
// with separately verified level results. Caps never change feasibility,
// only pruning, and a wrong cap would be caught by the oracle-equivalence
// tests rather than silently accepted.

#include "katona/circle.hpp"
#include "katona/predicates.hpp"
#include "katona/rational.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace katona {

struct SlotSpec {
    std::vector<int> levels;   // admissible lengths, distinct, search order

    static SlotSpec single(int k) { return {{k}}; }
    static SlotSpec range(int lo, int hi);
    // 1..n-1 ordered middle-out, which makes cap-driven pruning bite early.
    static SlotSpec all_levels(int n);
};

struct PredicateApplication {
    PredicateId pred;
    std::vector<int> slots;   // one slot for plain predicates, >= 2 for cross
};

struct LevelCap { int slot; int level; int cap; };
struct HeadCap { int slot; int cap; };

struct SearchProblem {
    GroundSet ground;
    std::vector<SlotSpec> slots;
    std::vector<PredicateApplication> predicate;
    std::vector<Rational> weights;          // per slot; empty means all 1
    std::vector<int> nonempty_slots;
    // Each chain lists slot indices outermost first; they must share one
    // level spec, and membership is then monotone along the chain.
    std::vector<std::vector<int>> chains;
    std::vector<LevelCap> level_caps;
    std::vector<HeadCap> head_caps;
};

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = 0;   // 0 means unlimited
};

struct SearchReport {
    Rational optimum = 0;
    bool feasible = false;   // some assignment met the non-empty constraints
    // Canonical orbit representatives of every optimal slot tuple, sorted.
    std::vector<std::vector<ArcFamily>> witnesses;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

SearchReport maximize(const SearchProblem& prob, const SearchBudget& budget = {});

// Canonical representative of a slot tuple under the dihedral group acting
// on all slots at once. Exposed for tests and witness normalization.
std::vector<ArcFamily> canonical_tuple(const std::vector<ArcFamily>& tuple);
std::string tuple_key(const std::vector<ArcFamily>& tuple);

} // namespace katona
