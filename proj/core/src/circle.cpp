#include "katona/circle.hpp"

#include <algorithm>
#include <bit>

namespace katona {

GroundSet::GroundSet(int n_) : n(n_) {
    if (n < 1 || n > 63)
        throw DomainError("ground set size must be in 1..63, got " + std::to_string(n_));
}

PointSet PointSet::from_points(const GroundSet& g, const std::vector<int>& pts) {
    PointSet ps(g, 0);
    for (int p : pts) {
        if (p < 1 || p > g.n)
            throw DomainError("point " + std::to_string(p) + " outside 1.." + std::to_string(g.n));
        ps.bits |= std::uint64_t{1} << (p - 1);
    }
    return ps;
}

int PointSet::size() const { return std::popcount(bits); }

std::vector<int> PointSet::points() const {
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
        if (contains(p)) out.push_back(p);
    return out;
}

static void check_arc(const GroundSet& g, const Arc& a) {
    if (a.len < 1 || a.len > g.n - 1)
        throw DomainError("arc length " + std::to_string(a.len) +
                          " outside 1.." + std::to_string(g.n - 1));
    if (a.head < 1 || a.head > g.n)
        throw DomainError("arc head " + std::to_string(a.head) +
                          " outside 1.." + std::to_string(g.n));
}

std::uint64_t arc_bits(const GroundSet& g, const Arc& a) {
    check_arc(g, a);
    std::uint64_t run = (std::uint64_t{1} << a.len) - 1;   // bits 0..len-1
    int h0 = a.head - 1;
    return ((run << h0) | (run >> (g.n - h0))) & g.full_mask();
}

PointSet arc_points(const GroundSet& g, const Arc& a) {
    return PointSet(g, arc_bits(g, a));
}

HeadTail arc_head_tail(const GroundSet& g, const Arc& a) {
    check_arc(g, a);
    return {a.head, g.wrap1(a.head + a.len - 1)};
}

void ArcFamily::insert(const Arc& a) {
    check_arc(ground_, a);
    levels_[a.len] |= std::uint64_t{1} << (a.head - 1);
}

void ArcFamily::insert_level(int k, std::uint64_t heads) {
    if (k < 1 || k > n() - 1)
        throw DomainError("arc length " + std::to_string(k) + " outside 1.." + std::to_string(n() - 1));
    if (heads & ~ground_.full_mask())
        throw DomainError("head vector has bits outside the ground set");
    if (heads) levels_[k] |= heads;
}

bool ArcFamily::contains(const Arc& a) const {
    check_arc(ground_, a);
    auto it = levels_.find(a.len);
    return it != levels_.end() && ((it->second >> (a.head - 1)) & 1);
}

void ArcFamily::erase(const Arc& a) {
    check_arc(ground_, a);
    auto it = levels_.find(a.len);
    if (it == levels_.end()) return;
    it->second &= ~(std::uint64_t{1} << (a.head - 1));
    if (it->second == 0) levels_.erase(it);
}

int ArcFamily::size() const {
    int total = 0;
    for (const auto& [k, heads] : levels_) total += std::popcount(heads);
    return total;
}

int ArcFamily::level_size(int k) const {
    auto it = levels_.find(k);
    return it == levels_.end() ? 0 : std::popcount(it->second);
}

std::uint64_t ArcFamily::level_heads(int k) const {
    auto it = levels_.find(k);
    return it == levels_.end() ? 0 : it->second;
}

std::vector<int> ArcFamily::occupied_levels() const {
    std::vector<int> out;
    for (const auto& [k, heads] : levels_) out.push_back(k);
    return out;
}

std::vector<Arc> ArcFamily::arcs() const {
    std::vector<Arc> out;
    for (const auto& [k, heads] : levels_)
        for (int h = 1; h <= n(); ++h)
            if ((heads >> (h - 1)) & 1) out.push_back({h, k});
    return out;
}

std::vector<std::uint64_t> ArcFamily::realize_bits() const {
    std::vector<std::uint64_t> out;
    for (const Arc& a : arcs()) out.push_back(arc_bits(ground_, a));
    return out;
}

std::vector<PointSet> ArcFamily::realize() const {
    std::vector<PointSet> out;
    for (std::uint64_t b : realize_bits()) out.emplace_back(ground_, b);
    return out;
}

ArcFamily full_level(const GroundSet& g, int k) {
    ArcFamily fam(g);
    fam.insert_level(k, g.full_mask());
    return fam;
}

ArcFamily full_circle(const GroundSet& g) {
    ArcFamily fam(g);
    for (int k = 1; k <= g.n - 1; ++k) fam.insert_level(k, g.full_mask());
    return fam;
}

static std::uint64_t rotate_heads(const GroundSet& g, std::uint64_t heads, int shift0) {
    shift0 = g.wrap0(shift0);
    if (shift0 == 0) return heads;
    return ((heads << shift0) | (heads >> (g.n - shift0))) & g.full_mask();
}

ArcFamily complement_family(const ArcFamily& fam) {
    ArcFamily out(fam.ground());
    for (const auto& [k, heads] : fam.levels())
        out.insert_level(fam.n() - k, rotate_heads(fam.ground(), heads, k));
    return out;
}

ArcFamily rotate_family(const ArcFamily& fam, int shift) {
    ArcFamily out(fam.ground());
    for (const auto& [k, heads] : fam.levels())
        out.insert_level(k, rotate_heads(fam.ground(), heads, shift));
    return out;
}

ArcFamily reflect_family(const ArcFamily& fam) {
    // p -> n+2-p maps the arc with head h, length k onto the arc with head
    // n+2-(h+k-1) wrapped: the old tail becomes the new head.
    const GroundSet& g = fam.ground();
    ArcFamily out(g);
    for (const auto& [k, heads] : fam.levels()) {
        std::uint64_t image = 0;
        for (int h = 1; h <= g.n; ++h)
            if ((heads >> (h - 1)) & 1)
                image |= std::uint64_t{1} << (g.wrap1(g.n + 2 - h - k + 1) - 1);
        out.insert_level(k, image);
    }
    return out;
}

// Lexicographic comparison of two ascending head lists; a strict prefix
// precedes its extensions.
static int compare_heads(std::uint64_t x, std::uint64_t y) {
    while (x || y) {
        if (!x) return -1;
        if (!y) return 1;
        int hx = std::countr_zero(x), hy = std::countr_zero(y);
        if (hx != hy) return hx < hy ? -1 : 1;
        x &= x - 1;
        y &= y - 1;
    }
    return 0;
}

// Families compare as their (length, sorted heads) serializations.
static bool family_less(const ArcFamily& a, const ArcFamily& b) {
    auto ita = a.levels().begin(), itb = b.levels().begin();
    while (ita != a.levels().end() && itb != b.levels().end()) {
        if (ita->first != itb->first) return ita->first < itb->first;
        if (int c = compare_heads(ita->second, itb->second); c != 0) return c < 0;
        ++ita, ++itb;
    }
    return itb != b.levels().end();
}

ArcFamily symmetry_orbit(const ArcFamily& fam, bool with_reflections) {
    ArcFamily best = fam;
    auto consider = [&](const ArcFamily& g) { if (family_less(g, best)) best = g; };
    for (int s = 0; s < fam.n(); ++s) consider(rotate_family(fam, s));
    if (with_reflections) {
        ArcFamily ref = reflect_family(fam);
        for (int s = 0; s < fam.n(); ++s) consider(rotate_family(ref, s));
    }
    return best;
}

SetFamily SetFamily::from_sets(const GroundSet& g,
                               const std::vector<std::vector<int>>& sets) {
    SetFamily fam(g);
    for (const auto& s : sets) fam.insert(PointSet::from_points(g, s));
    return fam;
}

void SetFamily::insert_bits(std::uint64_t member) {
    if (member & ~ground_.full_mask())
        throw DomainError("member has bits outside the ground set");
    auto it = std::lower_bound(members_.begin(), members_.end(), member);
    if (it == members_.end() || *it != member) members_.insert(it, member);
}

void SetFamily::insert(const PointSet& ps) {
    if (ps.n != n()) throw DomainError("point set ground size mismatch");
    insert_bits(ps.bits);
}

bool SetFamily::contains_bits(std::uint64_t member) const {
    return std::binary_search(members_.begin(), members_.end(), member);
}

void SetFamily::erase_bits(std::uint64_t member) {
    auto it = std::lower_bound(members_.begin(), members_.end(), member);
    if (it != members_.end() && *it == member) members_.erase(it);
}

std::map<int, int> SetFamily::level_profile() const {
    std::map<int, int> prof;
    for (std::uint64_t m : members_) prof[std::popcount(m)]++;
    return prof;
}

bool SetFamily::uniform(int* k_out) const {
    if (members_.empty()) return true;
    int k = std::popcount(members_.front());
    for (std::uint64_t m : members_)
        if (std::popcount(m) != k) return false;
    if (k_out) *k_out = k;
    return true;
}

SetFamily realize_sets(const ArcFamily& fam) {
    SetFamily out(fam.ground());
    for (std::uint64_t b : fam.realize_bits()) out.insert_bits(b);
    return out;
}

} // namespace katona
