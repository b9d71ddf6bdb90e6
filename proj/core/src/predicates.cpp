#include "katona/predicates.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace katona {

bool is_intersecting(MaskView fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i; j < fam.size(); ++j)
            if ((fam[i] & fam[j]) == 0) return false;
    return true;
}

namespace {

// True iff no subset of at most `depth_left` further members (indices >= at)
// can shrink `inter` to empty. Visiting a subset with empty intersection at
// any depth refutes s-wise intersection because tuples may repeat members.
bool swise_rec(MaskView fam, std::size_t at, int depth_left, std::uint64_t inter) {
    if (inter == 0) return false;
    if (depth_left == 0) return true;
    for (std::size_t i = at; i < fam.size(); ++i)
        if (!swise_rec(fam, i + 1, depth_left - 1, inter & fam[i])) return false;
    return true;
}

bool rwise_rec(MaskView fam, std::uint64_t full, std::size_t at, int depth_left,
               std::uint64_t uni) {
    if (uni == full) return false;
    if (depth_left == 0) return true;
    for (std::size_t i = at; i < fam.size(); ++i)
        if (!rwise_rec(fam, full, i + 1, depth_left - 1, uni | fam[i])) return false;
    return true;
}

} // namespace

bool is_s_wise_intersecting(MaskView fam, int s) {
    if (s < 1) throw DomainError("s-wise intersection needs s >= 1");
    return swise_rec(fam, 0, s, ~std::uint64_t{0});
}

bool is_r_wise_union(const GroundSet& g, MaskView fam, int r) {
    if (r < 1) throw DomainError("r-wise union condition needs r >= 1");
    return rwise_rec(fam, g.full_mask(), 0, r, 0);
}

namespace {

bool cross_inter_rec(const std::vector<MaskView>& fams, std::size_t slot,
                     std::uint64_t inter) {
    // Callers guarantee every slot non-empty, so an empty running
    // intersection always completes to a bad transversal.
    if (inter == 0) return false;
    if (slot == fams.size()) return true;
    for (std::uint64_t m : fams[slot])
        if (!cross_inter_rec(fams, slot + 1, inter & m)) return false;
    return true;
}

bool cross_union_rec(const std::vector<MaskView>& fams, std::uint64_t full,
                     std::size_t slot, std::uint64_t uni) {
    if (uni == full) return false;
    if (slot == fams.size()) return true;
    for (std::uint64_t m : fams[slot])
        if (!cross_union_rec(fams, full, slot + 1, uni | m)) return false;
    return true;
}

} // namespace

bool are_cross_intersecting(const std::vector<MaskView>& fams) {
    if (fams.size() < 2) throw DomainError("cross-intersection needs at least two families");
    for (const auto& f : fams)
        if (f.empty()) return true;
    return cross_inter_rec(fams, 0, ~std::uint64_t{0});
}

bool are_cross_union(const GroundSet& g, const std::vector<MaskView>& fams) {
    if (fams.size() < 2) throw DomainError("cross-union condition needs at least two families");
    for (const auto& f : fams)
        if (f.empty()) return true;
    return cross_union_rec(fams, g.full_mask(), 0, 0);
}

bool is_s_wise_cross_intersecting(const std::vector<MaskView>& fams, int s) {
    if (s < 2) throw DomainError("s-wise cross-intersection needs s >= 2");
    int q = int(fams.size());
    if (q < s)
        throw DomainError("s-wise cross-intersection needs at least s families, got " +
                          std::to_string(q));
    // Walk all s-subsets of the q slots.
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        std::vector<MaskView> sub;
        sub.reserve(s);
        for (int i : idx) sub.push_back(fams[i]);
        if (!are_cross_intersecting(sub)) return false;
        int i = s - 1;
        while (i >= 0 && idx[i] == q - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

bool is_antichain(MaskView fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            std::uint64_t meet = fam[i] & fam[j];
            if (meet == fam[i] || meet == fam[j]) return false;
        }
    return true;
}

int longest_chain(MaskView fam) {
    if (fam.empty()) return -1;
    std::vector<std::uint64_t> ms(fam.begin(), fam.end());
    std::sort(ms.begin(), ms.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<int> depth(ms.size(), 0);
    int best = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (ms[j] != ms[i] && (ms[j] & ms[i]) == ms[j])
                depth[i] = std::max(depth[i], depth[j] + 1);
        best = std::max(best, depth[i]);
    }
    return best;
}

bool is_chain_free(MaskView fam, int l) {
    if (l < 1) throw DomainError("chain-free needs l >= 1");
    return longest_chain(fam) < l;
}

bool contains_butterfly(MaskView fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            std::uint64_t u = fam[i] | fam[j];
            int containers = 0;
            for (std::size_t k = 0; k < fam.size(); ++k) {
                if (k == i || k == j) continue;
                if ((fam[k] & u) == u && ++containers >= 2) break;
            }
            if (containers >= 2) return true;
        }
    return false;
}

std::optional<int> star_center(MaskView fam) {
    std::uint64_t inter = ~std::uint64_t{0};
    for (std::uint64_t m : fam) inter &= m;
    if (fam.empty() || inter == 0) return std::nullopt;
    return std::countr_zero(inter) + 1;
}

bool is_star(MaskView fam) {
    if (fam.empty()) return true;
    return star_center(fam).has_value();
}

namespace {

void matching_rec(const std::vector<std::uint64_t>& ms, std::size_t at,
                  std::uint64_t used, int count, int min_size, std::uint64_t full,
                  int& best) {
    best = std::max(best, count);
    int free_space = std::popcount(full & ~used);
    if (count + free_space / min_size <= best) return;
    for (std::size_t i = at; i < ms.size(); ++i)
        if ((ms[i] & used) == 0)
            matching_rec(ms, i + 1, used | ms[i], count + 1, min_size, full, best);
}

} // namespace

int matching_number(MaskView fam) {
    if (fam.empty()) return 0;
    std::vector<std::uint64_t> ms(fam.begin(), fam.end());
    int min_size = 64;
    std::uint64_t full = 0;
    for (std::uint64_t m : ms) {
        if (m == 0) throw DomainError("matching number undefined for a family containing the empty set");
        min_size = std::min(min_size, std::popcount(m));
        full |= m;
    }
    std::sort(ms.begin(), ms.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    int best = 0;
    matching_rec(ms, 0, 0, 0, min_size, full, best);
    return best;
}

bool is_iu(const GroundSet& g, MaskView fam) {
    std::uint64_t full = g.full_mask();
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i; j < fam.size(); ++j) {
            if ((fam[i] & fam[j]) == 0) return false;
            if ((fam[i] | fam[j]) == full) return false;
        }
    return true;
}

bool satisfies_gronau(const GroundSet& g, MaskView fam) {
    std::uint64_t full = g.full_mask();
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i; j < fam.size(); ++j) {
            bool iu_pair = (fam[i] & fam[j]) != 0 && (fam[i] | fam[j]) != full;
            bool complement_pair = fam[i] == (full & ~fam[j]);
            if (!iu_pair && !complement_pair) return false;
        }
    return true;
}

bool is_intersecting(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return is_intersecting(bits);
}
bool is_s_wise_intersecting(const ArcFamily& fam, int s) {
    auto bits = fam.realize_bits();
    return is_s_wise_intersecting(bits, s);
}
bool is_r_wise_union(const ArcFamily& fam, int r) {
    auto bits = fam.realize_bits();
    return is_r_wise_union(fam.ground(), bits, r);
}
bool is_antichain(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return is_antichain(bits);
}
int longest_chain(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return longest_chain(bits);
}
bool contains_butterfly(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return contains_butterfly(bits);
}
bool is_star(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return is_star(bits);
}
int matching_number(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return matching_number(bits);
}
bool is_iu(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return is_iu(fam.ground(), bits);
}
bool satisfies_gronau(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    return satisfies_gronau(fam.ground(), bits);
}

namespace {

struct TagInfo {
    PredicateTag tag;
    const char* name;
    bool param;
    bool joint;
};

constexpr TagInfo kTags[] = {
    {PredicateTag::Intersecting, "intersecting", false, false},
    {PredicateTag::SWiseIntersecting, "s-wise-intersecting", true, false},
    {PredicateTag::RWiseUnion, "r-wise-union", true, false},
    {PredicateTag::CrossIntersecting, "cross-intersecting", false, true},
    {PredicateTag::CrossUnion, "cross-union", false, true},
    {PredicateTag::SWiseCrossIntersecting, "s-wise-cross-intersecting", true, true},
    {PredicateTag::Antichain, "antichain", false, false},
    {PredicateTag::ChainFree, "chain-free", true, false},
    {PredicateTag::ButterflyFree, "butterfly-free", false, false},
    {PredicateTag::Star, "star", false, false},
    {PredicateTag::Iu, "iu", false, false},
    {PredicateTag::Gronau, "gronau", false, false},
    {PredicateTag::MatchingAtMost, "matching-at-most", true, false},
};

const TagInfo& info_for(PredicateTag tag) {
    for (const auto& t : kTags)
        if (t.tag == tag) return t;
    throw DomainError("unknown predicate tag");
}

} // namespace

std::string PredicateId::to_string() const {
    const TagInfo& t = info_for(tag);
    if (!t.param) return t.name;
    return std::string(t.name) + ":" + std::to_string(param);
}

bool PredicateId::takes_param() const { return info_for(tag).param; }
bool PredicateId::joint() const { return info_for(tag).joint; }

PredicateId PredicateId::parse(std::string_view text) {
    std::string_view name = text;
    int param = 0;
    bool has_param = false;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        name = text.substr(0, colon);
        std::string_view num = text.substr(colon + 1);
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), param);
        if (ec != std::errc{} || p != num.data() + num.size())
            throw DomainError("malformed predicate parameter in '" + std::string(text) + "'");
        has_param = true;
    }
    for (const auto& t : kTags) {
        if (name != t.name) continue;
        if (t.param != has_param)
            throw DomainError(std::string(t.name) +
                              (t.param ? " needs a :parameter" : " takes no parameter"));
        return PredicateId{t.tag, param};
    }
    throw DomainError("unknown predicate '" + std::string(text) + "'");
}

bool evaluate_predicate(const PredicateId& id, const GroundSet& g,
                        const std::vector<std::vector<std::uint64_t>>& fams) {
    auto single = [&]() -> MaskView {
        if (fams.size() != 1)
            throw DomainError(id.to_string() + " applies to exactly one family");
        return fams[0];
    };
    auto views = [&]() {
        std::vector<MaskView> v;
        v.reserve(fams.size());
        for (const auto& f : fams) v.emplace_back(f);
        return v;
    };
    switch (id.tag) {
        case PredicateTag::Intersecting: return is_intersecting(single());
        case PredicateTag::SWiseIntersecting: return is_s_wise_intersecting(single(), id.param);
        case PredicateTag::RWiseUnion: return is_r_wise_union(g, single(), id.param);
        case PredicateTag::CrossIntersecting: return are_cross_intersecting(views());
        case PredicateTag::CrossUnion: return are_cross_union(g, views());
        case PredicateTag::SWiseCrossIntersecting:
            return is_s_wise_cross_intersecting(views(), id.param);
        case PredicateTag::Antichain: return is_antichain(single());
        case PredicateTag::ChainFree: return is_chain_free(single(), id.param);
        case PredicateTag::ButterflyFree: return !contains_butterfly(single());
        case PredicateTag::Star: return is_star(single());
        case PredicateTag::Iu: return is_iu(g, single());
        case PredicateTag::Gronau: return satisfies_gronau(g, single());
        case PredicateTag::MatchingAtMost: {
            if (id.param < 0) throw DomainError("matching-at-most needs r >= 0");
            return matching_number(single()) <= id.param;
        }
    }
    throw DomainError("unknown predicate tag");
}

} // namespace katona
