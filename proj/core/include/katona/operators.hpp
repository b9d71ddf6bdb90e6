#pragma once
// Shadow and shade operators.
//
// On the circle these act level by level on head vectors. For a family B of
// k-arcs, the (k+1)-arcs containing some member are exactly those whose head
// lies in heads(B) or one step before it, and the (k-1)-arcs contained in
// some member are those whose head lies in heads(B) or one step after it.
// Both are one OR with a rotated copy of the head vector. The brute-force
// definition by set containment is kept in the tests as an oracle.

#include "katona/circle.hpp"

#include <vector>

namespace katona {

// Shade of a single-level arc family at level k: all (k+1)-arcs containing a
// member. Requires the family uniform at k with k <= n-2; shading level n-1
// would produce the full circle, which is not an arc.
ArcFamily shade_immediate(const ArcFamily& fam);

// Shadow at level k: all (k-1)-arcs contained in a member. Requires k >= 2.
ArcFamily shadow_immediate(const ArcFamily& fam);

// sigma^l: iterated shade (l > k) or shadow (l < k); the identity at l = k.
// Requires a single-level family and 1 <= l <= n-1. The result size obeys
// |sigma^l(B)| >= min(n, |B| + |l-k|) for non-empty B.
ArcFamily shadow_iterated(const ArcFamily& fam, int l);

// Maximal runs of circularly consecutive heads at the (single) occupied
// level. Rejects the empty family and the full level: a full circle of heads
// has no well-defined run decomposition.
struct HeadRun { int start; int length; };   // start head, run length
struct ComponentProfile {
    int lambda = 0;                 // number of runs
    std::vector<HeadRun> runs;      // sorted by start head
};
ComponentProfile lambda_components(const ArcFamily& fam);

// Shade and shadow for uniform plain set families over [n]: all supersets
// (resp. subsets) one element away from a member. Shade requires k+1 <= n,
// shadow requires k >= 1.
SetFamily set_shade(const SetFamily& fam);
SetFamily set_shadow(const SetFamily& fam);

// Replaces the bottom level of an antichain by its shade: with l the minimum
// member size, returns (F minus the l-level) united with the shade of the
// l-level. Requires an antichain with l < n. The result is validated to be
// an antichain again; a violation throws PropertyViolation with the two
// comparable members serialized.
SetFamily sperner_lift(const SetFamily& fam);

// Same operation, additionally validating a caller-supplied property on the
// result (for walks that must preserve, say, 3-wise intersection). Throws
// PropertyViolation naming `property_name` when `property` rejects the lifted
// family. The property is evaluated, never assumed.
SetFamily sperner_lift_checked(const SetFamily& fam,
                               bool (*property)(const SetFamily&),
                               const char* property_name);

} // namespace katona
