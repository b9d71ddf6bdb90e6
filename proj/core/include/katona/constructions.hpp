#pragma once
// Named extremal families. Each constructor validates its parameter domain
// (DomainError), builds the family by definition, and then asserts its
// closed-form size; a size mismatch would mean the construction itself is
// wrong and throws PropertyViolation rather than returning quietly.

#include "katona/circle.hpp"

#include <string>
#include <variant>
#include <vector>

namespace katona {

// The k arcs of length k containing position x.
ArcFamily star_arcs(const GroundSet& g, int k, int x);

// Three pencils of k-arcs through the point pairs {x1,xp}, {xp,xq}, {xq,x1}.
// Intersecting, and once it has at least three members, not a star. Size
// 3k-n. Requires k <= n <= 3(k-1), 1 < p < q <= n, p <= k, q <= p+k-1,
// q+k-1 > n, and each of the three circular gaps at most n-k so the pencils
// stay disjoint.
ArcFamily m_pq(const GroundSet& g, int k, int p, int q);
// The standard parameter choice p = k, q = 2k-1.
ArcFamily m_pq_default(const GroundSet& g, int k);

// Union of full levels of the cube: all sets of each size in `sizes`.
// Sizes may include 0 and n. Longest chain = |sizes| - 1.
SetFamily erdos_levels(const GroundSet& g, const std::vector<int>& sizes);

// k-sets containing 1 and meeting {2,..,k+1}, plus {2,..,k+1} itself.
// Size C(n-1,k-1) - C(n-k-1,k-1) + 1. Requires n >= 2k >= 4.
SetFamily hilton_milner_family(const GroundSet& g, int k);

// Arcs of every length containing position i and avoiding position j.
// Size d(n-d) with d the circular distance from i forward to j.
ArcFamily d_ij(const GroundSet& g, int i, int j);

// k-arcs meeting the transversal point set T. When the points of T are
// pairwise at circular distance >= k the size is exactly |T| * k and that is
// asserted; otherwise the family is smaller and no closed form is claimed.
ArcFamily b_k_of_T(const GroundSet& g, int k, const std::vector<int>& T);

// Arcs of every length meeting {floor(n/2), n}. Level k holds 2k arcs for
// k < n/2 and all n arcs for k >= n/2; the total is 2q^2 + q(q-1) for n = 2q
// and (2q+1)q + q(q+1) for n = 2q+1. Requires n >= 3.
ArcFamily b_T2(const GroundSet& g);

// All sets of size >= k where n = k(s+1) - 1; matching number exactly s.
// Size = sum of C(n,i) for i >= k.
SetFamily kleitman_family(const GroundSet& g, int s);

// k-sets meeting {1,..,r}. Size C(n,k) - C(n-r,k). Requires n >= k(r+1).
SetFamily l_family(const GroundSet& g, int k, int r);

// Every k-subset of [k(r+1)-1]; the ground set size is implied. Matching
// number r.
SetFamily complete_k_uniform(int k, int r);

// For n = 3k-1: the n sets A_k(x_i) plus the single point x_{i-k}, each of
// size k+1. Together with the two (k-1)-arcs headed at x_{i-k+1} and
// x_{i+k}, each member partitions the circle, and that is asserted here.
SetFamily pencil_extension_family(const GroundSet& g, int k);
// One member of the family above.
std::uint64_t pencil_extension_bits(const GroundSet& g, int k, int i);

// Construction names for the CLI, e.g. "m_pq:6,3,3,5". Integer list
// arguments join their items with '+': "b_k_of_T:9,3,1+4+7".
using Construction = std::variant<ArcFamily, SetFamily>;
Construction build_construction(const std::string& id);
std::vector<std::string> construction_usage();

} // namespace katona
