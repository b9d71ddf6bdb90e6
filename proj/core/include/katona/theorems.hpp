#pragma once
// Theorem registry: every verified bound in one table. An entry knows its
// hypothesis, its closed-form bound, and how to compute the exact optimum
// (branch-and-bound search over arc families, or direct enumeration for
// cube statements), so verify_bound can compare achieved against bound and
// fail loudly on any violation. Entries flagged informational record
// conjectures: their achieved value is reported but never enforced.
//
// Deficit-style entries (identities and lower-bound laws) report
// achieved = the worst signed violation over the whole enumerated space
// and use bound = 0, so achieved <= bound still expresses correctness.

#include "katona/circle.hpp"
#include "katona/rational.hpp"
#include "katona/search.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace katona {

struct TheoremParams {
    int n = 0;
    int k = 0;
    int l = 0;
    int s = 0;
    int r = 0;
    Rational c = 1;
    std::vector<int> lengths;   // per-slot arc lengths for tuple problems
};

struct TheoremResult {
    Rational bound = 0;
    Rational achieved = 0;
    bool tight = false;
    bool informational = false;
    std::vector<std::vector<ArcFamily>> witnesses;   // slot tuples from searches
    std::vector<SetFamily> set_witnesses;            // extremal cube families
    std::vector<std::string> notes;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct Theorem {
    std::string id;
    std::string summary;
    std::string param_names;     // e.g. "n k", shown by list-theorems
    bool informational = false;
    std::function<void(const TheoremParams&)> require;   // DomainError on violation
    std::function<Rational(const TheoremParams&)> bound;
    std::function<TheoremResult(const TheoremParams&, const SearchBudget&)> run;
};

const std::vector<Theorem>& theorem_registry();
const Theorem& find_theorem(const std::string& id);   // DomainError when unknown

// Checks the hypothesis, runs the verification, and compares the achieved
// value against the bound. A non-informational entry whose achieved value
// exceeds its bound aborts with BoundViolation carrying a witness.
TheoremResult verify_bound(const std::string& id, const TheoremParams& p,
                           const SearchBudget& budget = {});

// Expected extremal families for the uniqueness claims, canonical and
// sorted. Intersecting k-arc families at the bound: for n > 2k the stars
// (a single canonical form); at n = 2k every transversal picking one arc
// from each complementary pair is optimal and all their canonical forms
// are returned.
std::vector<ArcFamily> ekr_extremal_families(const GroundSet& g, int k);
// Intersecting-union families at the bound: arcs through one position
// avoiding another, the two positions (near-)antipodal.
std::vector<ArcFamily> iu_extremal_families(const GroundSet& g);

// Middle-level overflow check for the relaxed pair condition at even n:
// whenever a compatible family keeps q + t middle-level arcs (q = n/2,
// t >= 1), no arc of length <= t or >= n-t can join it. Verified over
// every middle-level subset of size above q; enumeration capped at n = 12.
// On failure writes a description to *fail_detail when provided.
bool gronau_overflow_forces_empty_levels(const GroundSet& g,
                                         std::string* fail_detail = nullptr);

} // namespace katona
