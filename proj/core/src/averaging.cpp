#include "katona/averaging.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace katona {

CyclicOrder CyclicOrder::identity(const GroundSet& g) {
    CyclicOrder o;
    o.arrangement.resize(g.n);
    for (int i = 0; i < g.n; ++i) o.arrangement[i] = i + 1;
    return o;
}

CyclicOrder CyclicOrder::from_arrangement(const GroundSet& g, std::vector<int> arr) {
    if (int(arr.size()) != g.n)
        throw DomainError("arrangement length differs from the ground set size");
    if (arr.empty() || arr[0] != 1)
        throw DomainError("arrangements pin element 1 at position 1");
    std::uint64_t seen = 0;
    for (int v : arr) {
        if (v < 1 || v > g.n) throw DomainError("arrangement entry outside 1..n");
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (seen & bit) throw DomainError("arrangement repeats element " + std::to_string(v));
        seen |= bit;
    }
    CyclicOrder o;
    o.arrangement = std::move(arr);
    return o;
}

void for_each_cyclic_order(const GroundSet& g,
                           const std::function<void(const CyclicOrder&)>& fn,
                           int limit) {
    if (g.n > limit)
        throw DomainError("cyclic order enumeration limited to n <= " + std::to_string(limit) +
                          "; use sampling for larger n");
    CyclicOrder o = CyclicOrder::identity(g);
    do {
        fn(o);
    } while (std::next_permutation(o.arrangement.begin() + 1, o.arrangement.end()));
}

namespace {

// Counts members of the sorted mask list that occur as k-arcs of the order.
int trace_masks(const std::vector<std::uint64_t>& sorted, const GroundSet& g,
                const CyclicOrder& order, int k) {
    if (k < 1 || k > g.n - 1) throw DomainError("trace level outside 1..n-1");
    const auto& arr = order.arrangement;
    // Rolling window of k consecutive circle positions.
    std::uint64_t window = 0;
    for (int i = 0; i < k; ++i) window |= std::uint64_t{1} << (arr[i] - 1);
    int count = 0;
    for (int r = 0; r < g.n; ++r) {
        if (std::binary_search(sorted.begin(), sorted.end(), window)) ++count;
        window &= ~(std::uint64_t{1} << (arr[r] - 1));
        window |= std::uint64_t{1} << (arr[(r + k) % g.n] - 1);
    }
    return count;
}

std::vector<std::uint64_t> sorted_bits(const ArcFamily& fam) {
    auto bits = fam.realize_bits();
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    return bits;
}

int uniform_size(const SetFamily& fam, int k) {
    int got = 0;
    if (!fam.uniform(&got) || (!fam.empty() && got != k))
        throw DomainError("family must be uniform of size " + std::to_string(k));
    return k;
}

} // namespace

int trace(const SetFamily& fam, const CyclicOrder& order, int k) {
    return trace_masks(fam.members(), fam.ground(), order, k);
}

int trace(const ArcFamily& fam, const CyclicOrder& order, int k) {
    return trace_masks(sorted_bits(fam), fam.ground(), order, k);
}

int trace_all_levels(const SetFamily& fam, const CyclicOrder& order) {
    int total = 0;
    for (int k = 1; k <= fam.n() - 1; ++k) total += trace(fam, order, k);
    return total;
}

int trace_all_levels(const ArcFamily& fam, const CyclicOrder& order) {
    auto bits = sorted_bits(fam);
    int total = 0;
    for (int k = 1; k <= fam.n() - 1; ++k)
        total += trace_masks(bits, fam.ground(), order, k);
    return total;
}

AverageReport exact_average(const SetFamily& fam, int k, int limit) {
    const GroundSet& g = fam.ground();
    if (k < 1 || k > g.n - 1) throw DomainError("level outside 1..n-1");
    uniform_size(fam, k);
    AverageReport rep;
    rep.argmax = CyclicOrder::identity(g);
    rep.max_trace = -1;
    BigInt total = 0, orders = 0;
    for_each_cyclic_order(g, [&](const CyclicOrder& o) {
        int t = trace(fam, o, k);
        total += t;
        orders += 1;
        if (t > rep.max_trace) {
            rep.max_trace = t;
            rep.argmax = o;
        }
    }, limit);
    rep.order_count = orders;
    rep.average = Rational(total, orders * g.n);
    return rep;
}

Rational lift_bound(const Rational& circle_bound, int n, int k) {
    if (n < 1) throw DomainError("lift needs n >= 1");
    if (k < 0 || k > n) throw DomainError("lift needs 0 <= k <= n");
    return circle_bound * Rational(binomial(n, k), n);
}

Rational lym_sum(const SetFamily& fam, LymMode mode) {
    const int n = fam.n();
    Rational sum = 0;
    for (std::uint64_t m : fam.members()) {
        int sz = std::popcount(m);
        switch (mode) {
            case LymMode::Standard:
                if (sz <= 0 || sz >= n)
                    throw DomainError("standard LYM needs proper non-empty members");
                sum += Rational(1, binomial(n, sz));
                break;
            case LymMode::Shifted:
                if (sz <= 0) throw DomainError("shifted LYM needs non-empty members");
                sum += Rational(1, binomial(n - 1, sz - 1));
                break;
            case LymMode::Circle:
                if (sz <= 0 || sz >= n)
                    throw DomainError("circle LYM needs proper non-empty members");
                sum += Rational(1, n);
                break;
        }
    }
    return sum;
}

namespace {

// Unbiased bounded draw on top of the fixed mt19937_64 stream, so results
// are identical across platforms for a given seed.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

} // namespace

SampleReport sample_average(const SetFamily& fam, int k, int trials, std::uint64_t seed) {
    const GroundSet& g = fam.ground();
    if (k < 1 || k > g.n - 1) throw DomainError("level outside 1..n-1");
    if (trials < 1) throw DomainError("sampling needs at least one trial");
    uniform_size(fam, k);

    std::mt19937_64 rng(seed);
    CyclicOrder o = CyclicOrder::identity(g);
    BigInt sum = 0, sum_sq = 0;
    for (int t = 0; t < trials; ++t) {
        // Fisher-Yates on positions 2..n keeps element 1 pinned.
        for (int i = g.n - 1; i >= 2; --i) {
            int j = 1 + int(bounded(rng, std::uint64_t(i)));
            std::swap(o.arrangement[i], o.arrangement[j]);
        }
        int tr = trace(fam, o, k);
        sum += tr;
        sum_sq += BigInt(tr) * tr;
    }
    SampleReport rep;
    rep.trials = trials;
    rep.estimate = Rational(sum, BigInt(trials) * g.n);
    rep.exact_target = Rational(BigInt(fam.size()), binomial(g.n, k));
    if (trials > 1) {
        // Sample variance of trace/n, then the standard error of the mean.
        double mean = double(sum) / trials;
        double var = (double(sum_sq) - trials * mean * mean) / (trials - 1);
        rep.std_error = std::sqrt(std::max(var, 0.0)) / (double(g.n) * std::sqrt(double(trials)));
    }
    return rep;
}

} // namespace katona
