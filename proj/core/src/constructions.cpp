#include "katona/constructions.hpp"

#include "katona/predicates.hpp"
#include "katona/rational.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace katona {

namespace {

void assert_size(const char* what, long long actual, const BigInt& expected) {
    if (BigInt(actual) != expected)
        throw PropertyViolation(std::string(what) + " size check failed: built " +
                                    std::to_string(actual) + ", closed form " + expected.str(),
                                "{\"construction\":\"" + std::string(what) + "\"}");
}

// Enumeration guard for cube-level constructions.
void check_enumerable(const GroundSet& g, const char* what) {
    if (g.n > 24)
        throw DomainError(std::string(what) + " enumerates subsets of [n]; n capped at 24");
}

int circular_distance(const GroundSet& g, int from, int to) {
    return g.wrap0(to - from);   // steps forward from `from` to `to`
}

} // namespace

ArcFamily star_arcs(const GroundSet& g, int k, int x) {
    if (k < 1 || k > g.n - 1) throw DomainError("star needs 1 <= k <= n-1");
    if (x < 1 || x > g.n) throw DomainError("star center outside the ground set");
    ArcFamily fam(g);
    for (int d = 0; d < k; ++d) fam.insert({g.wrap1(x - d), k});
    assert_size("star_arcs", fam.size(), k);
    return fam;
}

ArcFamily m_pq(const GroundSet& g, int k, int p, int q) {
    int n = g.n;
    if (k < 2 || k > n) throw DomainError("pencil triple needs 2 <= k <= n");
    if (n > 3 * (k - 1)) throw DomainError("pencil triple needs n <= 3(k-1)");
    if (!(1 < p && p < q && q <= n)) throw DomainError("pencil triple needs 1 < p < q <= n");
    if (p > k) throw DomainError("pencil triple needs p <= k");
    if (q > p + k - 1) throw DomainError("pencil triple needs q <= p+k-1");
    if (q + k - 1 <= n) throw DomainError("pencil triple needs q+k-1 > n");
    // Gaps between the three marked points, going forward: q..1 wraps.
    int gaps[3] = {p - 1, q - p, n - q + 1};
    for (int d : gaps)
        if (d > n - k)
            throw DomainError("pencil triple needs every gap between marked points <= n-k; "
                              "gap " + std::to_string(d) + " is too wide for n=" +
                              std::to_string(n) + ", k=" + std::to_string(k));
    std::uint64_t marks[3] = {
        std::uint64_t{1} | (std::uint64_t{1} << (p - 1)),
        (std::uint64_t{1} << (p - 1)) | (std::uint64_t{1} << (q - 1)),
        (std::uint64_t{1} << (q - 1)) | std::uint64_t{1},
    };
    ArcFamily fam(g);
    for (int h = 1; h <= n; ++h) {
        std::uint64_t pts = arc_bits(g, {h, k});
        for (std::uint64_t pair : marks)
            if ((pts & pair) == pair) fam.insert({h, k});
    }
    assert_size("m_pq", fam.size(), 3 * k - n);
    return fam;
}

ArcFamily m_pq_default(const GroundSet& g, int k) { return m_pq(g, k, k, 2 * k - 1); }

SetFamily erdos_levels(const GroundSet& g, const std::vector<int>& sizes) {
    check_enumerable(g, "level union");
    std::vector<int> ks = sizes;
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
        throw DomainError("level union needs distinct sizes");
    BigInt expected = 0;
    SetFamily fam(g);
    for (int k : ks) {
        if (k < 0 || k > g.n) throw DomainError("level size outside 0..n");
        expected += binomial(g.n, k);
        for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
            if (std::popcount(m) == k) fam.insert_bits(m);
    }
    assert_size("erdos_levels", fam.size(), expected);
    return fam;
}

SetFamily hilton_milner_family(const GroundSet& g, int k) {
    int n = g.n;
    if (k < 2 || n < 2 * k) throw DomainError("Hilton-Milner family needs n >= 2k >= 4");
    check_enumerable(g, "Hilton-Milner family");
    std::uint64_t base = 0;
    for (int p = 2; p <= k + 1; ++p) base |= std::uint64_t{1} << (p - 1);
    SetFamily fam(g);
    fam.insert_bits(base);
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
        if (std::popcount(m) == k && (m & 1) && (m & base)) fam.insert_bits(m);
    assert_size("hilton_milner", fam.size(),
                binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1);
    return fam;
}

ArcFamily d_ij(const GroundSet& g, int i, int j) {
    int n = g.n;
    if (i < 1 || i > n || j < 1 || j > n) throw DomainError("positions outside the ground set");
    if (i == j) throw DomainError("the kept and avoided position must differ");
    std::uint64_t want = std::uint64_t{1} << (i - 1);
    std::uint64_t avoid = std::uint64_t{1} << (j - 1);
    ArcFamily fam(g);
    for (int k = 1; k <= n - 1; ++k)
        for (int h = 1; h <= n; ++h) {
            std::uint64_t pts = arc_bits(g, {h, k});
            if ((pts & want) && !(pts & avoid)) fam.insert({h, k});
        }
    int d = circular_distance(g, i, j);
    assert_size("d_ij", fam.size(), BigInt(d) * (n - d));
    return fam;
}

ArcFamily b_k_of_T(const GroundSet& g, int k, const std::vector<int>& T) {
    if (k < 1 || k > g.n - 1) throw DomainError("transversal family needs 1 <= k <= n-1");
    if (T.empty()) throw DomainError("transversal point set is empty");
    std::uint64_t tmask = PointSet::from_points(g, T).bits;
    if (std::popcount(tmask) != int(T.size()))
        throw DomainError("transversal points must be distinct");
    ArcFamily fam(g);
    for (int h = 1; h <= g.n; ++h)
        if (arc_bits(g, {h, k}) & tmask) fam.insert({h, k});
    bool spaced = true;
    for (int a : T)
        for (int b : T)
            if (a != b && circular_distance(g, a, b) < k) spaced = false;
    if (spaced) assert_size("b_k_of_T", fam.size(), BigInt(T.size()) * k);
    return fam;
}

ArcFamily b_T2(const GroundSet& g) {
    int n = g.n;
    if (n < 3) throw DomainError("two-point transversal family needs n >= 3");
    std::uint64_t tmask = (std::uint64_t{1} << (n / 2 - 1)) | (std::uint64_t{1} << (n - 1));
    ArcFamily fam(g);
    for (int k = 1; k <= n - 1; ++k)
        for (int h = 1; h <= n; ++h)
            if (arc_bits(g, {h, k}) & tmask) fam.insert({h, k});
    for (int k = 1; k <= n - 1; ++k)
        assert_size("b_T2 level", fam.level_size(k), 2 * k >= n ? n : 2 * k);
    int q = n / 2;
    BigInt total = (n % 2 == 0) ? BigInt(2) * q * q + BigInt(q) * (q - 1)
                                : BigInt(2 * q + 1) * q + BigInt(q) * (q + 1);
    assert_size("b_T2", fam.size(), total);
    return fam;
}

SetFamily kleitman_family(const GroundSet& g, int s) {
    int n = g.n;
    if (s < 1) throw DomainError("matching parameter must be >= 1");
    if ((n + 1) % (s + 1) != 0)
        throw DomainError("needs n = k(s+1) - 1 for an integer k");
    int k = (n + 1) / (s + 1);
    check_enumerable(g, "large-set family");
    SetFamily fam(g);
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
        if (std::popcount(m) >= k) fam.insert_bits(m);
    BigInt expected = 0;
    for (int i = k; i <= n; ++i) expected += binomial(n, i);
    assert_size("kleitman_family", fam.size(), expected);
    return fam;
}

SetFamily l_family(const GroundSet& g, int k, int r) {
    int n = g.n;
    if (k < 1 || r < 1) throw DomainError("needs k >= 1 and r >= 1");
    if (n < k * (r + 1)) throw DomainError("needs n >= k(r+1)");
    check_enumerable(g, "prefix-meeting family");
    std::uint64_t prefix = (std::uint64_t{1} << r) - 1;
    SetFamily fam(g);
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
        if (std::popcount(m) == k && (m & prefix)) fam.insert_bits(m);
    assert_size("l_family", fam.size(), binomial(n, k) - binomial(n - r, k));
    return fam;
}

SetFamily complete_k_uniform(int k, int r) {
    if (k < 1 || r < 1) throw DomainError("needs k >= 1 and r >= 1");
    GroundSet g(k * (r + 1) - 1);
    check_enumerable(g, "complete uniform family");
    SetFamily fam(g);
    for (std::uint64_t m = 0; m <= g.full_mask(); ++m)
        if (std::popcount(m) == k) fam.insert_bits(m);
    assert_size("complete_k_uniform", fam.size(), binomial(g.n, k));
    return fam;
}

std::uint64_t pencil_extension_bits(const GroundSet& g, int k, int i) {
    if (g.n != 3 * k - 1) throw DomainError("pencil extension needs n = 3k-1");
    if (i < 1 || i > g.n) throw DomainError("index outside the ground set");
    return arc_bits(g, {i, k}) | (std::uint64_t{1} << (g.wrap1(i - k) - 1));
}

SetFamily pencil_extension_family(const GroundSet& g, int k) {
    if (k < 2 || g.n != 3 * k - 1) throw DomainError("pencil extension needs n = 3k-1, k >= 2");
    SetFamily fam(g);
    for (int i = 1; i <= g.n; ++i) {
        std::uint64_t b = pencil_extension_bits(g, k, i);
        if (std::popcount(b) != k + 1)
            throw PropertyViolation("pencil extension member has wrong size", "{}");
        std::uint64_t left = arc_bits(g, {g.wrap1(i - k + 1), k - 1});
        std::uint64_t right = arc_bits(g, {g.wrap1(i + k), k - 1});
        if ((b | left | right) != g.full_mask() || (b & left) || (b & right) || (left & right))
            throw PropertyViolation("pencil extension member fails to partition the circle",
                                    "{\"i\":" + std::to_string(i) + "}");
        fam.insert_bits(b);
    }
    assert_size("pencil_extension_family", fam.size(), g.n);
    return fam;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw DomainError("malformed integer '" + s + "' in construction id");
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split(s, '+')) out.push_back(parse_int(part));
    return out;
}

} // namespace

Construction build_construction(const std::string& id) {
    auto colon = id.find(':');
    std::string name = id.substr(0, colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) args = split(id.substr(colon + 1), ',');
    auto want = [&](std::size_t c) {
        if (args.size() != c)
            throw DomainError("construction " + name + " takes " + std::to_string(c) +
                              " arguments, got " + std::to_string(args.size()));
    };
    if (name == "star_arcs") {
        want(3);
        return star_arcs(GroundSet(parse_int(args[0])), parse_int(args[1]), parse_int(args[2]));
    }
    if (name == "m_pq") {
        if (args.size() == 2) return m_pq_default(GroundSet(parse_int(args[0])), parse_int(args[1]));
        want(4);
        return m_pq(GroundSet(parse_int(args[0])), parse_int(args[1]), parse_int(args[2]),
                    parse_int(args[3]));
    }
    if (name == "erdos_levels") {
        want(2);
        return erdos_levels(GroundSet(parse_int(args[0])), parse_int_list(args[1]));
    }
    if (name == "hilton_milner") {
        want(2);
        return hilton_milner_family(GroundSet(parse_int(args[0])), parse_int(args[1]));
    }
    if (name == "d_ij") {
        want(3);
        return d_ij(GroundSet(parse_int(args[0])), parse_int(args[1]), parse_int(args[2]));
    }
    if (name == "b_k_of_T") {
        want(3);
        return b_k_of_T(GroundSet(parse_int(args[0])), parse_int(args[1]), parse_int_list(args[2]));
    }
    if (name == "b_T2") {
        want(1);
        return b_T2(GroundSet(parse_int(args[0])));
    }
    if (name == "kleitman_D") {
        want(2);
        return kleitman_family(GroundSet(parse_int(args[0])), parse_int(args[1]));
    }
    if (name == "L_family") {
        want(3);
        return l_family(GroundSet(parse_int(args[0])), parse_int(args[1]), parse_int(args[2]));
    }
    if (name == "complete_K") {
        want(2);
        return complete_k_uniform(parse_int(args[0]), parse_int(args[1]));
    }
    if (name == "b_family") {
        want(2);
        return pencil_extension_family(GroundSet(parse_int(args[0])), parse_int(args[1]));
    }
    throw DomainError("unknown construction '" + name + "'");
}

std::vector<std::string> construction_usage() {
    return {
        "star_arcs:n,k,x           k-arcs through position x",
        "m_pq:n,k[,p,q]            three pencils of k-arcs (default p=k, q=2k-1)",
        "erdos_levels:n,k1+k2+...  union of full cube levels",
        "hilton_milner:n,k         k-sets meeting {2..k+1} and containing 1, plus {2..k+1}",
        "d_ij:n,i,j                arcs containing i, avoiding j",
        "b_k_of_T:n,k,t1+t2+...    k-arcs meeting the point set T",
        "b_T2:n                    arcs meeting {floor(n/2), n}",
        "kleitman_D:n,s            sets of size >= (n+1)/(s+1)",
        "L_family:n,k,r            k-sets meeting {1..r}",
        "complete_K:k,r            all k-subsets of [k(r+1)-1]",
        "b_family:n,k              k-arcs extended by one point, n = 3k-1",
    };
}

} // namespace katona
