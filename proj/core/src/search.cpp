// Branch-and-bound engine behind maximize(). The recursion walks a fixed
// candidate order (group by group, level by level, head 1..n); each node
// decides one candidate's membership depth. Feasibility is maintained
// incrementally: a new violation of a hereditary predicate must involve the
// newly added arc, so each check only explores tuples through that arc.

#include "katona/search.hpp"
#include "katona/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace katona {

SlotSpec SlotSpec::range(int lo, int hi) {
    SlotSpec s;
    for (int k = lo; k <= hi; ++k) s.levels.push_back(k);
    return s;
}

SlotSpec SlotSpec::all_levels(int n) {
    SlotSpec s;
    int lo = 1, hi = n - 1;
    std::vector<int> order;
    int mid = (lo + hi + 1) / 2;
    order.push_back(mid);
    for (int d = 1; (int)order.size() < hi - lo + 1; ++d) {
        if (mid - d >= lo) order.push_back(mid - d);
        if (mid + d <= hi) order.push_back(mid + d);
    }
    s.levels = order;
    return s;
}

std::string tuple_key(const std::vector<ArcFamily>& tuple) {
    std::ostringstream os;
    for (const auto& fam : tuple) {
        os << '[';
        for (const Arc& a : fam.arcs()) os << a.len << ':' << a.head << ',';
        os << ']';
    }
    return os.str();
}

std::vector<ArcFamily> canonical_tuple(const std::vector<ArcFamily>& tuple) {
    std::vector<ArcFamily> best = tuple;
    std::string best_key = tuple_key(tuple);
    if (tuple.empty()) return best;
    int n = tuple.front().ground().n;
    for (int refl = 0; refl < 2; ++refl) {
        for (int s = 0; s < n; ++s) {
            std::vector<ArcFamily> img;
            img.reserve(tuple.size());
            for (const auto& fam : tuple) {
                ArcFamily f = refl ? reflect_family(fam) : fam;
                img.push_back(rotate_family(f, s));
            }
            std::string key = tuple_key(img);
            if (key < best_key) {
                best_key = std::move(key);
                best = std::move(img);
            }
        }
    }
    return best;
}

namespace {

using std::uint64_t;

// ---- anchored feasibility checks ----------------------------------------
// Each returns true when adding `px` keeps the predicate satisfied, given
// that the prior state satisfied it. `members` are point masks.

bool anchored_intersecting(const std::vector<uint64_t>& members, uint64_t px) {
    if (px == 0) return false;
    for (uint64_t m : members)
        if ((m & px) == 0) return false;
    return true;
}

bool anchored_swise_rec(const std::vector<uint64_t>& members, std::size_t at,
                        int depth_left, uint64_t inter) {
    if (inter == 0) return false;
    if (depth_left == 0) return true;
    for (std::size_t i = at; i < members.size(); ++i)
        if (!anchored_swise_rec(members, i, depth_left - 1, inter & members[i]))
            return false;
    return true;
}

bool anchored_union_rec(const std::vector<uint64_t>& members, std::size_t at,
                        int depth_left, uint64_t uni, uint64_t full) {
    if (uni == full) return false;
    if (depth_left == 0) return true;
    for (std::size_t i = at; i < members.size(); ++i)
        if (!anchored_union_rec(members, i, depth_left - 1, uni | members[i], full))
            return false;
    return true;
}

// View of one co-slot in a cross predicate. A violation needs a member from
// every slot, so a slot that is empty and allowed to stay empty makes a
// failing prefix vacuous. A slot constrained non-empty gains a member in
// every completed assignment, and once the prefix has failed any member
// keeps it failing, so the violation is inevitable and rejected eagerly.
struct CrossView {
    const std::vector<uint64_t>* members;
    bool may_stay_empty;
};

bool anchored_cross_inter(const std::vector<CrossView>& others, std::size_t at,
                          uint64_t inter) {
    if (at == others.size()) return inter != 0;
    if (inter == 0) {
        for (std::size_t i = at; i < others.size(); ++i)
            if (others[i].members->empty() && others[i].may_stay_empty) return true;
        return false;
    }
    for (uint64_t m : *others[at].members)
        if (!anchored_cross_inter(others, at + 1, inter & m)) return false;
    return true;
}

bool anchored_cross_union(const std::vector<CrossView>& others, std::size_t at,
                          uint64_t uni, uint64_t full) {
    if (at == others.size()) return uni != full;
    if (uni == full) {
        for (std::size_t i = at; i < others.size(); ++i)
            if (others[i].members->empty() && others[i].may_stay_empty) return true;
        return false;
    }
    for (uint64_t m : *others[at].members)
        if (!anchored_cross_union(others, at + 1, uni | m, full)) return false;
    return true;
}

bool anchored_antichain(const std::vector<uint64_t>& members, uint64_t px) {
    for (uint64_t m : members) {
        if (m == px) continue;   // chains never hand the same mask twice to one slot
        if ((m & px) == m || (m & px) == px) return false;
    }
    return true;
}

int longest_chain_through(const std::vector<uint64_t>& members, uint64_t px) {
    // Longest chain (by containment) in members + px that passes through px.
    std::vector<uint64_t> below, above;
    for (uint64_t m : members) {
        if (m == px) continue;
        if ((m & px) == m) below.push_back(m);
        else if ((m & px) == px) above.push_back(m);
    }
    auto side_depth = [](std::vector<uint64_t>& side) {
        std::sort(side.begin(), side.end(), [](uint64_t a, uint64_t b) {
            return std::popcount(a) < std::popcount(b);
        });
        int best = 0;
        std::vector<int> dp(side.size(), 1);
        for (std::size_t i = 0; i < side.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if ((side[j] & side[i]) == side[j] && side[j] != side[i])
                    dp[i] = std::max(dp[i], dp[j] + 1);
            best = std::max(best, dp[i]);
        }
        return best;
    };
    return side_depth(below) + 1 + side_depth(above);
}

bool anchored_butterfly_free(const std::vector<uint64_t>& members, uint64_t px) {
    // px as a container: pair it with each existing member H, then two
    // distinct members inside px & H complete a butterfly.
    for (uint64_t h : members) {
        if (h == px) continue;
        uint64_t core = px & h;
        int inside = 0;
        for (uint64_t m : members) {
            if (m == h || m == px) continue;
            if ((m & core) == m && ++inside >= 2) return false;
        }
    }
    // px as a wing: together with member f it needs two distinct containers
    // of px | f among the other members.
    for (uint64_t f : members) {
        if (f == px) continue;
        uint64_t uni = px | f;
        int containers = 0;
        for (uint64_t m : members) {
            if (m == f || m == px) continue;
            if ((m & uni) == uni && ++containers >= 2) return false;
        }
    }
    return true;
}

bool anchored_star(const std::vector<uint64_t>& members, uint64_t px) {
    uint64_t inter = px;
    for (uint64_t m : members) inter &= m;
    return inter != 0;
}

bool can_pick_disjoint(const std::vector<uint64_t>& members, std::size_t at,
                       uint64_t used, int need) {
    if (need == 0) return true;
    for (std::size_t i = at; i < members.size(); ++i)
        if ((members[i] & used) == 0 &&
            can_pick_disjoint(members, i + 1, used | members[i], need - 1))
            return true;
    return false;
}

bool anchored_matching_at_most(const std::vector<uint64_t>& members, uint64_t px,
                               int r) {
    // Violated when px extends some r pairwise disjoint members to r+1.
    if (px == 0) return true;
    return !can_pick_disjoint(members, 0, px, r);
}

bool anchored_iu(const std::vector<uint64_t>& members, uint64_t px, uint64_t full) {
    if (px == 0 || px == full) return false;
    for (uint64_t m : members)
        if ((m & px) == 0 || (m | px) == full) return false;
    return true;
}

bool anchored_gronau(const std::vector<uint64_t>& members, uint64_t px,
                     uint64_t full) {
    if (px == 0 || px == full) return false;
    for (uint64_t m : members) {
        if ((m & px) != 0 && (m | px) != full) continue;
        if (m == (full ^ px)) continue;
        return false;
    }
    return true;
}

// ---- engine -------------------------------------------------------------

struct Group {
    std::vector<int> slot_ids;   // outermost first for chains
    std::vector<int> levels;
};

struct Candidate {
    int group;
    int level_pos;
    int level;
    int head;
    uint64_t pbits;
};

class Engine {
public:
    Engine(const SearchProblem& prob, const SearchBudget& budget)
        : prob_(prob), budget_(budget), g_(prob.ground), n_(prob.ground.n) {
        validate();
        build_groups();
        build_candidates();
        prepare_weights();
        prepare_caps();
        slot_state_.resize(prob_.slots.size());
        for (auto& st : slot_state_) {
            st.level_count.assign(static_cast<std::size_t>(n_) + 1, 0);
            st.head_count.assign(static_cast<std::size_t>(n_) + 1, 0);
        }
        required_.assign(prob_.slots.size(), false);
        for (int s : prob_.nonempty_slots) required_[static_cast<std::size_t>(s)] = true;
    }

    SearchReport run() {
        start_ = std::chrono::steady_clock::now();
        rec(0);
        SearchReport rep;
        rep.nodes = nodes_;
        rep.seconds = elapsed();
        rep.feasible = found_any_;
        if (found_any_) {
            rep.optimum = Rational(best_scaled_) / scale_;
            for (auto& [key, tup] : best_witnesses_) rep.witnesses.push_back(tup);
            verify_witnesses(rep);
        }
        return rep;
    }

private:
    const SearchProblem& prob_;
    SearchBudget budget_;
    GroundSet g_;
    int n_;

    std::vector<Group> groups_;
    std::vector<Candidate> cands_;
    std::vector<long long> weight_scaled_;   // per slot
    BigInt scale_ = 1;

    // caps[slot][level] (0 when absent means "uncapped": stored as -1)
    std::vector<std::vector<int>> level_cap_;
    std::vector<int> head_cap_;              // per slot, -1 when uncapped

    struct SlotState {
        std::vector<uint64_t> members;  // point masks, insertion order
        std::map<int, uint64_t> heads_by_level;
        std::vector<int> level_count;
        std::vector<int> head_count;
        int total = 0;
    };
    std::vector<SlotState> slot_state_;
    std::vector<bool> required_;

    // remaining undecided candidates per group, by level position and head
    std::vector<std::vector<int>> remaining_level_;   // [group][level_pos]
    std::vector<std::vector<int>> remaining_head_;    // [group][head]
    std::vector<int> remaining_total_;                // [group]

    long long cur_scaled_ = 0;
    int total_arcs_ = 0;

    long long best_scaled_ = 0;
    bool found_any_ = false;
    std::map<std::string, std::vector<ArcFamily>> best_witnesses_;

    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

    void validate() {
        if (prob_.slots.empty()) throw DomainError("search problem needs at least one slot");
        for (const auto& spec : prob_.slots) {
            if (spec.levels.empty()) throw DomainError("slot with empty level list");
            std::set<int> seen;
            for (int k : spec.levels) {
                if (k < 1 || k > n_ - 1)
                    throw DomainError("slot level outside 1..n-1");
                if (!seen.insert(k).second)
                    throw DomainError("slot level listed twice");
            }
        }
        auto slot_ok = [&](int s) { return s >= 0 && s < (int)prob_.slots.size(); };
        for (const auto& app : prob_.predicate) {
            if (!app.pred.anti_monotone())
                throw DomainError("search predicates must be hereditary");
            std::set<int> seen;
            for (int s : app.slots) {
                if (!slot_ok(s)) throw DomainError("predicate references unknown slot");
                if (!seen.insert(s).second)
                    throw DomainError("predicate lists a slot twice");
            }
            std::size_t want_min = app.pred.joint() ? 2 : 1;
            if (app.pred.tag == PredicateTag::SWiseCrossIntersecting)
                want_min = static_cast<std::size_t>(std::max(2, app.pred.param));
            if (app.pred.joint()) {
                if (app.slots.size() < want_min)
                    throw DomainError("joint predicate needs more slots");
            } else if (app.slots.size() != 1) {
                throw DomainError("plain predicate takes exactly one slot");
            }
        }
        if (!prob_.weights.empty() && prob_.weights.size() != prob_.slots.size())
            throw DomainError("weight list length mismatch");
        for (const auto& w : prob_.weights)
            if (w <= 0) throw DomainError("slot weights must be positive");
        for (int s : prob_.nonempty_slots)
            if (!slot_ok(s)) throw DomainError("nonempty constraint on unknown slot");
        std::set<int> chained;
        for (const auto& chain : prob_.chains) {
            if (chain.size() < 2) throw DomainError("chain needs at least two slots");
            for (int s : chain) {
                if (!slot_ok(s)) throw DomainError("chain references unknown slot");
                if (!chained.insert(s).second)
                    throw DomainError("slot appears in two chains");
                if (prob_.slots[static_cast<std::size_t>(s)].levels !=
                    prob_.slots[static_cast<std::size_t>(chain[0])].levels)
                    throw DomainError("chained slots must share one level spec");
            }
        }
        for (const auto& c : prob_.level_caps) {
            if (!slot_ok(c.slot) || c.cap < 0) throw DomainError("bad level cap");
        }
        for (const auto& c : prob_.head_caps) {
            if (!slot_ok(c.slot) || c.cap < 0) throw DomainError("bad head cap");
        }
    }

    void build_groups() {
        std::vector<bool> in_chain(prob_.slots.size(), false);
        for (const auto& chain : prob_.chains) {
            Group grp;
            grp.slot_ids = chain;
            grp.levels = prob_.slots[static_cast<std::size_t>(chain[0])].levels;
            for (int s : chain) in_chain[static_cast<std::size_t>(s)] = true;
            groups_.push_back(std::move(grp));
        }
        for (std::size_t s = 0; s < prob_.slots.size(); ++s) {
            if (in_chain[s]) continue;
            groups_.push_back({{(int)s}, prob_.slots[s].levels});
        }
        // Heavier groups first so the incumbent climbs fast.
        auto group_weight = [&](const Group& grp) {
            Rational w = 0;
            for (int s : grp.slot_ids)
                w += prob_.weights.empty() ? Rational(1)
                                           : prob_.weights[static_cast<std::size_t>(s)];
            return w;
        };
        std::stable_sort(groups_.begin(), groups_.end(),
                         [&](const Group& a, const Group& b) {
                             return group_weight(a) > group_weight(b);
                         });
    }

    void build_candidates() {
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            const Group& grp = groups_[gi];
            for (std::size_t lp = 0; lp < grp.levels.size(); ++lp) {
                int k = grp.levels[lp];
                for (int h = 1; h <= n_; ++h)
                    cands_.push_back({(int)gi, (int)lp, k, h, arc_bits(g_, {h, k})});
            }
        }
        remaining_level_.assign(groups_.size(), {});
        remaining_head_.assign(groups_.size(),
                               std::vector<int>(static_cast<std::size_t>(n_) + 1, 0));
        remaining_total_.assign(groups_.size(), 0);
        for (std::size_t gi = 0; gi < groups_.size(); ++gi)
            remaining_level_[gi].assign(groups_[gi].levels.size(), 0);
        for (const Candidate& c : cands_) {
            remaining_level_[static_cast<std::size_t>(c.group)]
                            [static_cast<std::size_t>(c.level_pos)]++;
            remaining_head_[static_cast<std::size_t>(c.group)]
                           [static_cast<std::size_t>(c.head)]++;
            remaining_total_[static_cast<std::size_t>(c.group)]++;
        }
    }

    void prepare_weights() {
        std::vector<Rational> w = prob_.weights;
        if (w.empty()) w.assign(prob_.slots.size(), Rational(1));
        BigInt lcm = 1;
        for (const auto& r : w) {
            BigInt d = boost::multiprecision::denominator(r);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        scale_ = lcm;
        for (const auto& r : w) {
            Rational scaled = r * Rational(lcm);
            weight_scaled_.push_back(
                boost::multiprecision::numerator(scaled).convert_to<long long>());
        }
    }

    void prepare_caps() {
        level_cap_.assign(prob_.slots.size(),
                          std::vector<int>(static_cast<std::size_t>(n_) + 1, -1));
        head_cap_.assign(prob_.slots.size(), -1);
        for (const auto& c : prob_.level_caps) {
            int& cell = level_cap_[static_cast<std::size_t>(c.slot)]
                                  [static_cast<std::size_t>(c.level)];
            cell = cell < 0 ? c.cap : std::min(cell, c.cap);
        }
        for (const auto& c : prob_.head_caps) {
            int& cell = head_cap_[static_cast<std::size_t>(c.slot)];
            cell = cell < 0 ? c.cap : std::min(cell, c.cap);
        }
    }

    bool caps_allow(int slot, const Candidate& c) const {
        const SlotState& st = slot_state_[static_cast<std::size_t>(slot)];
        int lc = level_cap_[static_cast<std::size_t>(slot)]
                           [static_cast<std::size_t>(c.level)];
        if (lc >= 0 && st.level_count[static_cast<std::size_t>(c.level)] >= lc)
            return false;
        int hc = head_cap_[static_cast<std::size_t>(slot)];
        if (hc >= 0 && st.head_count[static_cast<std::size_t>(c.head)] >= hc)
            return false;
        return true;
    }

    bool check_add(int slot, uint64_t px) const {
        for (const auto& app : prob_.predicate) {
            bool touches = false;
            for (int s : app.slots) touches |= (s == slot);
            if (!touches) continue;
            if (!check_app(app, slot, px)) return false;
        }
        return true;
    }

    bool check_app(const PredicateApplication& app, int slot, uint64_t px) const {
        const auto& mine = slot_state_[static_cast<std::size_t>(slot)].members;
        uint64_t full = g_.full_mask();
        switch (app.pred.tag) {
        case PredicateTag::Intersecting:
            return anchored_intersecting(mine, px);
        case PredicateTag::SWiseIntersecting:
            return px != 0 && anchored_swise_rec(mine, 0, app.pred.param - 1, px);
        case PredicateTag::RWiseUnion:
            return px != full &&
                   anchored_union_rec(mine, 0, app.pred.param - 1, px, full);
        case PredicateTag::CrossIntersecting: {
            std::vector<CrossView> others;
            for (int s : app.slots)
                if (s != slot) others.push_back(cross_view(s));
            return anchored_cross_inter(others, 0, px);
        }
        case PredicateTag::CrossUnion: {
            std::vector<CrossView> others;
            for (int s : app.slots)
                if (s != slot) others.push_back(cross_view(s));
            return anchored_cross_union(others, 0, px, full);
        }
        case PredicateTag::SWiseCrossIntersecting: {
            // Every size-(s-1) choice of other slots must cross-intersect
            // with the new arc anchored.
            std::vector<int> others;
            for (int s : app.slots)
                if (s != slot) others.push_back(s);
            int pick = app.pred.param - 1;
            std::vector<int> chosen;
            return swise_cross_rec(others, 0, pick, chosen, px);
        }
        case PredicateTag::Antichain:
            return anchored_antichain(mine, px);
        case PredicateTag::ChainFree:
            // A chain of length l means l+1 nested sets, so l sets may share
            // one containment chain.
            return longest_chain_through(mine, px) <= app.pred.param;
        case PredicateTag::ButterflyFree:
            return anchored_butterfly_free(mine, px);
        case PredicateTag::Star:
            return anchored_star(mine, px);
        case PredicateTag::Iu:
            return anchored_iu(mine, px, full);
        case PredicateTag::Gronau:
            return anchored_gronau(mine, px, full);
        case PredicateTag::MatchingAtMost:
            return anchored_matching_at_most(mine, px, app.pred.param);
        }
        throw DomainError("unhandled predicate tag in search");
    }

    CrossView cross_view(int s) const {
        return {&slot_state_[static_cast<std::size_t>(s)].members,
                !required_[static_cast<std::size_t>(s)]};
    }

    bool swise_cross_rec(const std::vector<int>& others, std::size_t at, int pick,
                         std::vector<int>& chosen, uint64_t px) const {
        if (pick == 0) {
            std::vector<CrossView> views;
            for (int s : chosen) views.push_back(cross_view(s));
            return anchored_cross_inter(views, 0, px);
        }
        if (others.size() - at < static_cast<std::size_t>(pick)) return true;
        for (std::size_t i = at; i + static_cast<std::size_t>(pick) <= others.size(); ++i) {
            chosen.push_back(others[i]);
            bool ok = swise_cross_rec(others, i + 1, pick - 1, chosen, px);
            chosen.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    void apply_arc(int slot, const Candidate& c) {
        SlotState& st = slot_state_[static_cast<std::size_t>(slot)];
        st.members.push_back(c.pbits);
        st.heads_by_level[c.level] |= uint64_t{1} << (c.head - 1);
        st.level_count[static_cast<std::size_t>(c.level)]++;
        st.head_count[static_cast<std::size_t>(c.head)]++;
        st.total++;
        cur_scaled_ += weight_scaled_[static_cast<std::size_t>(slot)];
        total_arcs_++;
    }

    void unapply_arc(int slot, const Candidate& c) {
        SlotState& st = slot_state_[static_cast<std::size_t>(slot)];
        st.members.pop_back();
        uint64_t bit = uint64_t{1} << (c.head - 1);
        st.heads_by_level[c.level] &= ~bit;
        if (st.heads_by_level[c.level] == 0) st.heads_by_level.erase(c.level);
        st.level_count[static_cast<std::size_t>(c.level)]--;
        st.head_count[static_cast<std::size_t>(c.head)]--;
        st.total--;
        cur_scaled_ -= weight_scaled_[static_cast<std::size_t>(slot)];
        total_arcs_--;
    }

    long long upper_bound_additions() const {
        long long add = 0;
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            const Group& grp = groups_[gi];
            for (int slot : grp.slot_ids) {
                const SlotState& st = slot_state_[static_cast<std::size_t>(slot)];
                long long via_levels = 0;
                for (std::size_t lp = 0; lp < grp.levels.size(); ++lp) {
                    int k = grp.levels[lp];
                    long long rem = remaining_level_[gi][lp];
                    int lc = level_cap_[static_cast<std::size_t>(slot)]
                                       [static_cast<std::size_t>(k)];
                    if (lc >= 0)
                        rem = std::min<long long>(
                            rem, lc - st.level_count[static_cast<std::size_t>(k)]);
                    via_levels += std::max<long long>(0, rem);
                }
                long long bound = via_levels;
                int hc = head_cap_[static_cast<std::size_t>(slot)];
                if (hc >= 0) {
                    long long via_heads = 0;
                    for (int h = 1; h <= n_; ++h) {
                        long long rem = std::min<long long>(
                            remaining_head_[gi][static_cast<std::size_t>(h)],
                            hc - st.head_count[static_cast<std::size_t>(h)]);
                        via_heads += std::max<long long>(0, rem);
                    }
                    bound = std::min(bound, via_heads);
                }
                add += bound * weight_scaled_[static_cast<std::size_t>(slot)];
            }
        }
        return add;
    }

    bool hopeless_nonempty() const {
        for (std::size_t s = 0; s < required_.size(); ++s) {
            if (!required_[s] || slot_state_[s].total > 0) continue;
            bool has_candidates = false;
            for (std::size_t gi = 0; gi < groups_.size() && !has_candidates; ++gi)
                for (int sid : groups_[gi].slot_ids)
                    if (sid == (int)s && remaining_total_[gi] > 0)
                        has_candidates = true;
            if (!has_candidates) return true;
        }
        return false;
    }

    void tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes)
            throw BudgetExceeded("search node budget exhausted", nodes_, partial_note());
        if (budget_.max_seconds > 0 && (nodes_ & 8191) == 0 &&
            elapsed() > budget_.max_seconds)
            throw BudgetExceeded("search time budget exhausted", nodes_, partial_note());
    }

    std::string partial_note() const {
        std::ostringstream os;
        if (found_any_)
            os << "best value so far "
               << fraction_string(Rational(best_scaled_) / scale_);
        else
            os << "no feasible assignment completed yet";
        return os.str();
    }

    void leaf() {
        for (std::size_t s = 0; s < required_.size(); ++s)
            if (required_[s] && slot_state_[s].total == 0) return;
        long long v = cur_scaled_;
        if (!found_any_ || v > best_scaled_) {
            found_any_ = true;
            best_scaled_ = v;
            best_witnesses_.clear();
        }
        if (v == best_scaled_) record_witness();
    }

    void record_witness() {
        std::vector<ArcFamily> tup;
        tup.reserve(prob_.slots.size());
        for (const auto& st : slot_state_) {
            ArcFamily fam(g_);
            for (const auto& [k, heads] : st.heads_by_level)
                fam.insert_level(k, heads);
            tup.push_back(std::move(fam));
        }
        auto canon = canonical_tuple(tup);
        best_witnesses_.emplace(tuple_key(canon), std::move(canon));
    }

    void rec(std::size_t ci) {
        if (ci == cands_.size()) {
            leaf();
            return;
        }
        if (hopeless_nonempty()) return;
        const Candidate& c = cands_[ci];
        std::size_t gi = static_cast<std::size_t>(c.group);
        remaining_level_[gi][static_cast<std::size_t>(c.level_pos)]--;
        remaining_head_[gi][static_cast<std::size_t>(c.head)]--;
        remaining_total_[gi]--;

        const Group& grp = groups_[gi];
        int max_h = (int)grp.slot_ids.size();
        // Rotation symmetry: while the whole configuration is empty, only an
        // arc with head 1 may open it; every orbit has such a representative.
        if (total_arcs_ == 0 && c.head != 1) max_h = 0;

        int h_star = 0;
        for (int pos = 0; pos < max_h; ++pos) {
            int slot = grp.slot_ids[static_cast<std::size_t>(pos)];
            if (!caps_allow(slot, c) || !check_add(slot, c.pbits)) break;
            apply_arc(slot, c);
            ++h_star;
        }
        int applied = h_star;
        for (int t = h_star; t >= 0; --t) {
            while (applied > t) {
                --applied;
                unapply_arc(grp.slot_ids[static_cast<std::size_t>(applied)], c);
            }
            tick();
            // Strict pruning only: ties must survive so every optimal orbit
            // is collected.
            if (found_any_ && cur_scaled_ + upper_bound_additions() < best_scaled_)
                continue;
            rec(ci + 1);
        }

        remaining_level_[gi][static_cast<std::size_t>(c.level_pos)]++;
        remaining_head_[gi][static_cast<std::size_t>(c.head)]++;
        remaining_total_[gi]++;
    }

    void verify_witnesses(const SearchReport& rep) const {
        for (const auto& tup : rep.witnesses) {
            const std::string key = tuple_key(tup);
            Rational v = 0;
            for (std::size_t s = 0; s < tup.size(); ++s) {
                const Rational w = prob_.weights.empty()
                                       ? Rational(1)
                                       : prob_.weights[s];
                v += w * (long long)tup[s].size();
                for (const Arc& a : tup[s].arcs())
                    if (std::find(prob_.slots[s].levels.begin(),
                                  prob_.slots[s].levels.end(),
                                  a.len) == prob_.slots[s].levels.end())
                        throw PropertyViolation("witness arc at inadmissible level", key);
            }
            if (v != rep.optimum)
                throw PropertyViolation("witness value disagrees with optimum", key);
            for (int s : prob_.nonempty_slots)
                if (tup[static_cast<std::size_t>(s)].size() == 0)
                    throw PropertyViolation("witness violates non-empty constraint", key);
            for (const auto& chain : prob_.chains)
                for (std::size_t i = 1; i < chain.size(); ++i) {
                    auto outer = tup[static_cast<std::size_t>(chain[i - 1])].arcs();
                    for (const Arc& a : tup[static_cast<std::size_t>(chain[i])].arcs())
                        if (std::find(outer.begin(), outer.end(), a) == outer.end())
                            throw PropertyViolation("witness breaks chain nesting", key);
                }
            for (const auto& app : prob_.predicate) {
                std::vector<std::vector<uint64_t>> views;
                for (int s : app.slots) {
                    std::vector<uint64_t> v2;
                    for (const Arc& a : tup[static_cast<std::size_t>(s)].arcs())
                        v2.push_back(arc_bits(g_, a));
                    std::sort(v2.begin(), v2.end());
                    views.push_back(std::move(v2));
                }
                if (!evaluate_predicate(app.pred, g_, views))
                    throw PropertyViolation(
                        "witness fails predicate " + app.pred.to_string(), key);
            }
        }
    }
};

} // namespace

SearchReport maximize(const SearchProblem& prob, const SearchBudget& budget) {
    Engine eng(prob, budget);
    return eng.run();
}

} // namespace katona
