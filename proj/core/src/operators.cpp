#include "katona/operators.hpp"

#include <algorithm>
#include <bit>

namespace katona {

namespace {

// Requires exactly one occupied level; returns it.
int single_level(const ArcFamily& fam, const char* op) {
    auto lv = fam.occupied_levels();
    if (lv.size() != 1)
        throw DomainError(std::string(op) + " needs a non-empty single-level family, got " +
                          std::to_string(lv.size()) + " occupied levels");
    return lv.front();
}

std::uint64_t rot_up(const GroundSet& g, std::uint64_t heads) {
    // head h -> h+1
    return ((heads << 1) | (heads >> (g.n - 1))) & g.full_mask();
}

std::uint64_t rot_down(const GroundSet& g, std::uint64_t heads) {
    // head h -> h-1
    return ((heads >> 1) | (heads << (g.n - 1))) & g.full_mask();
}

} // namespace

ArcFamily shade_immediate(const ArcFamily& fam) {
    int k = single_level(fam, "shade");
    const GroundSet& g = fam.ground();
    if (k > g.n - 2)
        throw DomainError("shade at level " + std::to_string(k) + " of n=" +
                          std::to_string(g.n) + " would leave the arc range");
    std::uint64_t heads = fam.level_heads(k);
    ArcFamily out(g);
    out.insert_level(k + 1, heads | rot_down(g, heads));
    return out;
}

ArcFamily shadow_immediate(const ArcFamily& fam) {
    int k = single_level(fam, "shadow");
    const GroundSet& g = fam.ground();
    if (k < 2)
        throw DomainError("shadow at level 1 would leave the arc range");
    std::uint64_t heads = fam.level_heads(k);
    ArcFamily out(g);
    out.insert_level(k - 1, heads | rot_up(g, heads));
    return out;
}

ArcFamily shadow_iterated(const ArcFamily& fam, int l) {
    int k = single_level(fam, "iterated shadow");
    const GroundSet& g = fam.ground();
    if (l < 1 || l > g.n - 1)
        throw DomainError("target level " + std::to_string(l) + " outside 1.." +
                          std::to_string(g.n - 1));
    ArcFamily cur = fam;
    for (int j = k; j < l; ++j) cur = shade_immediate(cur);
    for (int j = k; j > l; --j) cur = shadow_immediate(cur);
    return cur;
}

ComponentProfile lambda_components(const ArcFamily& fam) {
    int k = single_level(fam, "component count");
    const GroundSet& g = fam.ground();
    std::uint64_t heads = fam.level_heads(k);
    if (heads == g.full_mask())
        throw DomainError("component count undefined for a full level");
    // Run starts: heads whose circular predecessor is absent.
    std::uint64_t starts = heads & ~rot_up(g, heads);
    ComponentProfile prof;
    prof.lambda = std::popcount(starts);
    for (int h = 1; h <= g.n; ++h) {
        if (!((starts >> (h - 1)) & 1)) continue;
        int len = 0;
        while ((heads >> (g.wrap1(h + len) - 1)) & 1) ++len;
        prof.runs.push_back({h, len});
    }
    return prof;
}

namespace {

int uniform_level(const SetFamily& fam, const char* op) {
    int k = 0;
    if (!fam.uniform(&k))
        throw DomainError(std::string(op) + " needs a uniform set family");
    if (fam.empty())
        throw DomainError(std::string(op) + " needs a non-empty set family");
    return k;
}

} // namespace

SetFamily set_shade(const SetFamily& fam) {
    int k = uniform_level(fam, "set shade");
    const GroundSet& g = fam.ground();
    if (k + 1 > g.n) throw DomainError("set shade would exceed the ground set");
    SetFamily out(g);
    for (std::uint64_t m : fam.members()) {
        std::uint64_t absent = g.full_mask() & ~m;
        while (absent) {
            std::uint64_t bit = absent & (~absent + 1);
            out.insert_bits(m | bit);
            absent ^= bit;
        }
    }
    return out;
}

SetFamily set_shadow(const SetFamily& fam) {
    int k = uniform_level(fam, "set shadow");
    if (k < 1) throw DomainError("set shadow of the empty-set level is undefined");
    SetFamily out(fam.ground());
    for (std::uint64_t m : fam.members()) {
        std::uint64_t present = m;
        while (present) {
            std::uint64_t bit = present & (~present + 1);
            out.insert_bits(m & ~bit);
            present ^= bit;
        }
    }
    return out;
}

namespace {

bool is_antichain_masks(const std::vector<std::uint64_t>& ms,
                        std::uint64_t* a_out, std::uint64_t* b_out) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            std::uint64_t meet = ms[i] & ms[j];
            if (meet == ms[i] || meet == ms[j]) {
                if (a_out) *a_out = ms[i];
                if (b_out) *b_out = ms[j];
                return false;
            }
        }
    return true;
}

std::string mask_json(std::uint64_t m, int n) {
    std::string s = "[";
    bool first = true;
    for (int p = 1; p <= n; ++p)
        if ((m >> (p - 1)) & 1) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
    return s + "]";
}

} // namespace

SetFamily sperner_lift(const SetFamily& fam) {
    if (fam.empty()) throw DomainError("lift of an empty family");
    {
        std::uint64_t a = 0, b = 0;
        if (!is_antichain_masks(fam.members(), &a, &b))
            throw DomainError("lift requires an antichain; " + mask_json(a, fam.n()) +
                              " and " + mask_json(b, fam.n()) + " are comparable");
    }
    int l = 64;
    for (std::uint64_t m : fam.members()) l = std::min(l, std::popcount(m));
    if (l >= fam.n()) throw DomainError("bottom level is the whole ground set");

    SetFamily bottom(fam.ground()), rest(fam.ground());
    for (std::uint64_t m : fam.members())
        (std::popcount(m) == l ? bottom : rest).insert_bits(m);
    SetFamily lifted = set_shade(bottom);
    for (std::uint64_t m : lifted.members()) rest.insert_bits(m);

    std::uint64_t a = 0, b = 0;
    if (!is_antichain_masks(rest.members(), &a, &b))
        throw PropertyViolation("lift broke the antichain property",
                                "{\"a\":" + mask_json(a, fam.n()) +
                                ",\"b\":" + mask_json(b, fam.n()) + "}");
    return rest;
}

SetFamily sperner_lift_checked(const SetFamily& fam,
                               bool (*property)(const SetFamily&),
                               const char* property_name) {
    SetFamily out = sperner_lift(fam);
    if (!property(out))
        throw PropertyViolation(std::string("lift broke property: ") + property_name,
                                "{\"property\":\"" + std::string(property_name) + "\"}");
    return out;
}

} // namespace katona
