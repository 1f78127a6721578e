#include "wedge/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wedge {

value_t anchored_length(const SweepSnapshots& snap, index_t r, std::int32_t j) {
    const Bar& bar = snap.input().bars[static_cast<std::size_t>(r)];
    value_t neighbor_death = snap.death_at_rank(r, j);
    value_t len = std::min(bar.death, neighbor_death) - bar.birth;
    return len > 0 ? len : 0;
}

std::uint64_t binomial_weight(int order, std::int64_t j, std::uint64_t cap) {
    if (order < 2) throw std::invalid_argument("binomial_weight: order must be >= 2");
    if (cap < 1) throw std::invalid_argument("binomial_weight: cap must be >= 1");
    std::int64_t n = j - 1;
    std::int64_t k = order - 2;
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        // exact at every step: the running value is C(n-k+t, t)
        unsigned __int128 next = static_cast<unsigned __int128>(result) *
                                 static_cast<std::uint64_t>(n - k + t) /
                                 static_cast<std::uint64_t>(t);
        if (next >= cap) return cap;
        result = static_cast<std::uint64_t>(next);
    }
    return result;
}

std::vector<DecompositionItem> enumerate_decomposition(const SweepSnapshots& snap, int order,
                                                       std::uint64_t weight_cap) {
    if (order < 2) throw std::invalid_argument("enumerate_decomposition: order must be >= 2");
    std::vector<DecompositionItem> items;
    for (index_t r = 0; r < snap.bar_count(); ++r) {
        std::int32_t c_r = snap.alive_count(r);
        for (std::int32_t j = order - 1; j <= c_r; ++j) {
            value_t len = anchored_length(snap, r, j);
            if (len <= 0) break; // lengths are non-increasing in j
            items.push_back(
                DecompositionItem{len, r, j, binomial_weight(order, j, weight_cap)});
        }
    }
    return items;
}

std::uint64_t decomposition_total(const SweepSnapshots& snap, int order) {
    std::uint64_t total = 0;
    for (const DecompositionItem& item : enumerate_decomposition(snap, order)) {
        if (total > kNoCap - item.weight) return kNoCap;
        total += item.weight;
    }
    return total;
}

namespace {

std::uint64_t tuple_count(std::int64_t m, int order, std::uint64_t cap) {
    // C(m, order), saturating at cap
    if (order > m) return 0;
    std::int64_t k = std::min<std::int64_t>(order, m - order);
    std::uint64_t result = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        unsigned __int128 next = static_cast<unsigned __int128>(result) *
                                 static_cast<std::uint64_t>(m - k + t) /
                                 static_cast<std::uint64_t>(t);
        if (next > cap) return cap + 1;
        result = static_cast<std::uint64_t>(next);
    }
    return result;
}

void enumerate_tuples(const Barcode& bc, int depth, index_t from, value_t max_birth,
                      value_t min_death, std::vector<Interval>& out) {
    if (depth == 0) {
        out.push_back(Interval{max_birth, min_death});
        return;
    }
    index_t m = bc.size();
    for (index_t l = from; l + depth <= m; ++l) {
        const Bar& bar = bc.bars[static_cast<std::size_t>(l)];
        value_t mb = std::max(max_birth, bar.birth);
        value_t md = std::min(min_death, bar.death);
        if (mb < md) // intersections only shrink, dead branches stay dead
            enumerate_tuples(bc, depth - 1, l + 1, mb, md, out);
    }
}

} // namespace

std::vector<Interval> brute_force_lambda(const Barcode& bc, int order,
                                         std::uint64_t tuple_guard) {
    if (order < 1) throw std::invalid_argument("brute_force_lambda: order must be >= 1");
    validate_barcode(bc);
    if (tuple_count(bc.size(), order, tuple_guard) > tuple_guard)
        throw GuardError("brute_force_lambda: C(" + std::to_string(bc.size()) + ", " +
                         std::to_string(order) + ") exceeds the tuple guard");
    std::vector<Interval> out;
    enumerate_tuples(bc, order, 0, -std::numeric_limits<value_t>::infinity(),
                     std::numeric_limits<value_t>::infinity(), out);
    return out;
}

} // namespace wedge
