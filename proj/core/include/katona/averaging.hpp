#pragma once
// Averaging over cyclic orders.
//
// A cyclic order is an arrangement of [n] around the circle. Rotating an
// arrangement never changes any trace, so enumeration fixes element 1 at
// position 1 and runs over the (n-1)! arrangements of the rest. For a family
// F of k-subsets of [n], the trace of an order is the number of members that
// appear as k-arcs of the rearranged circle; averaging trace/n over all
// orders gives exactly |F| / C(n,k), which is what turns a bound on every
// circle into a bound on the cube.
//
// All averages are exact rationals. The Monte Carlo path exists only for n
// beyond the enumeration limit and is labeled an estimate; it never feeds
// exact verification.

#include "katona/circle.hpp"
#include "katona/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace katona {

struct CyclicOrder {
    // arrangement[r] is the element at circle position r+1; arrangement[0] == 1.
    std::vector<int> arrangement;

    static CyclicOrder identity(const GroundSet& g);
    // Validates: a permutation of 1..n with element 1 first.
    static CyclicOrder from_arrangement(const GroundSet& g, std::vector<int> arr);
};

// Enumeration cap: (n-1)! orders are walked, so n is kept small.
inline constexpr int kDefaultOrderEnumerationLimit = 9;

// Calls fn for every cyclic order with element 1 pinned first. Throws
// DomainError when n exceeds `limit`.
void for_each_cyclic_order(const GroundSet& g,
                           const std::function<void(const CyclicOrder&)>& fn,
                           int limit = kDefaultOrderEnumerationLimit);

// Number of members of `fam` that are k-arcs of the rearranged circle.
int trace(const SetFamily& fam, const CyclicOrder& order, int k);
int trace(const ArcFamily& fam, const CyclicOrder& order, int k);
// Sum of the above over k = 1..n-1.
int trace_all_levels(const SetFamily& fam, const CyclicOrder& order);
int trace_all_levels(const ArcFamily& fam, const CyclicOrder& order);

struct AverageReport {
    Rational average;        // of trace/n over all orders; equals |F|/C(n,k)
    int max_trace = 0;       // best single order
    CyclicOrder argmax;      // one order attaining max_trace
    BigInt order_count = 0;  // (n-1)!
};

// Exact average of trace/n over all (n-1)! orders. Requires every member of
// `fam` to have size k, 1 <= k <= n-1, and n within the enumeration limit.
AverageReport exact_average(const SetFamily& fam, int k,
                            int limit = kDefaultOrderEnumerationLimit);

// Turns a per-circle bound into a cube bound: bound/n * C(n,k).
Rational lift_bound(const Rational& circle_bound, int n, int k);

enum class LymMode {
    Standard,   // sum of 1 / C(n, |F|); every member must be proper: 0 < |F| < n
    Shifted,    // sum of 1 / C(n-1, |F|-1); every member non-empty
    Circle,     // sum of 1/n, the per-arc mass on the circle; members proper
};

Rational lym_sum(const SetFamily& fam, LymMode mode);

struct SampleReport {
    Rational estimate;       // mean of trace/n over sampled orders
    Rational exact_target;   // |F| / C(n,k)
    double std_error = 0.0;  // sample standard error of the mean (estimate only)
    int trials = 0;
};

// Unbiased Monte Carlo estimate of |F|/C(n,k) from `trials` uniform cyclic
// orders drawn with the given seed; deterministic per (seed, trials). Same
// uniformity preconditions as exact_average, with no limit on n.
SampleReport sample_average(const SetFamily& fam, int k, int trials,
                            std::uint64_t seed);

} // namespace katona
