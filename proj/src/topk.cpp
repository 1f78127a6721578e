#include "wedge/topk.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace wedge {

namespace {

void require_query(int order, std::int64_t k) {
    if (order < 2) throw std::invalid_argument("topk: order must be >= 2");
    if (k < 0) throw std::invalid_argument("topk: k must be >= 0");
}

struct GroupedEntry {
    value_t length;
    index_t anchor;
    std::int32_t rank;
    std::uint64_t weight;
};

// Pop order: length descending, then anchor, then rank. Entries are unique
// per (anchor, rank), so this is a total order and runs are reproducible.
struct GroupedBefore {
    bool operator()(const GroupedEntry& a, const GroupedEntry& b) const {
        if (a.length != b.length) return a.length < b.length;
        if (a.anchor != b.anchor) return a.anchor > b.anchor;
        return a.rank > b.rank;
    }
};

std::vector<index_t> tuple_for(const SweepSnapshots& snap, index_t anchor,
                               std::span<const std::int32_t> ranks) {
    std::vector<index_t> bars;
    bars.reserve(ranks.size() + 1);
    for (std::int32_t rank : ranks) bars.push_back(snap.bar_at_rank(anchor, rank));
    bars.push_back(anchor);
    std::sort(bars.begin(), bars.end());
    return bars;
}

} // namespace

TopKResult topk_grouped(const SweepSnapshots& snap, int order, std::int64_t k) {
    require_query(order, k);
    TopKResult res;
    if (k == 0) return res;
    const std::uint64_t cap = static_cast<std::uint64_t>(k);

    std::priority_queue<GroupedEntry, std::vector<GroupedEntry>, GroupedBefore> heap;
    for (index_t r = 0; r < snap.bar_count(); ++r) {
        if (snap.alive_count(r) < order - 1) continue;
        value_t len = anchored_length(snap, r, order - 1);
        if (len > 0)
            heap.push(GroupedEntry{len, r, order - 1, binomial_weight(order, order - 1, cap)});
    }

    while (static_cast<std::int64_t>(res.lengths.size()) < k && !heap.empty()) {
        GroupedEntry e = heap.top();
        heap.pop();
        std::uint64_t copies =
            std::min<std::uint64_t>(e.weight, cap - res.lengths.size());
        res.lengths.insert(res.lengths.end(), copies, e.length);
        res.emissions.push_back(Emission{e.length, e.anchor, e.rank, copies});
        if (e.rank < snap.alive_count(e.anchor)) {
            value_t len = anchored_length(snap, e.anchor, e.rank + 1);
            if (len > 0)
                heap.push(GroupedEntry{len, e.anchor, e.rank + 1,
                                       binomial_weight(order, e.rank + 1, cap)});
        }
    }
    return res;
}

TopKResult topk_enum(const SweepSnapshots& snap, int order, std::int64_t k) {
    require_query(order, k);
    TopKResult res;
    if (k == 0) return res;
    const std::uint64_t cap = static_cast<std::uint64_t>(k);

    std::vector<DecompositionItem> items = enumerate_decomposition(snap, order, cap);
    std::sort(items.begin(), items.end(),
              [](const DecompositionItem& a, const DecompositionItem& b) {
                  if (a.length != b.length) return a.length > b.length;
                  if (a.anchor != b.anchor) return a.anchor < b.anchor;
                  return a.rank < b.rank;
              });
    for (const DecompositionItem& item : items) {
        if (static_cast<std::int64_t>(res.lengths.size()) >= k) break;
        std::uint64_t copies = std::min<std::uint64_t>(item.weight, cap - res.lengths.size());
        res.lengths.insert(res.lengths.end(), copies, item.length);
        res.emissions.push_back(Emission{item.length, item.anchor, item.rank, copies});
    }
    return res;
}

namespace {

struct ColexEntry {
    value_t length;
    index_t anchor;
    std::vector<std::int32_t> ranks; // strictly increasing
};

// Colex on rank tuples: compare largest elements first.
bool colex_less(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct ColexBefore {
    bool operator()(const ColexEntry& a, const ColexEntry& b) const {
        if (a.length != b.length) return a.length < b.length;
        if (a.anchor != b.anchor) return a.anchor > b.anchor;
        return colex_less(b.ranks, a.ranks);
    }
};

struct StateHash {
    std::size_t operator()(const std::pair<index_t, std::vector<std::int32_t>>& s) const {
        std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(s.first);
        for (std::int32_t r : s.second) {
            h ^= static_cast<std::uint64_t>(r) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

TopKResult topk_colex(const SweepSnapshots& snap, int order, std::int64_t k,
                      bool with_identities) {
    require_query(order, k);
    TopKResult res;
    if (with_identities) res.identities.emplace();
    if (k == 0) return res;
    const std::int32_t m = order - 1;

    std::priority_queue<ColexEntry, std::vector<ColexEntry>, ColexBefore> heap;
    std::unordered_set<std::pair<index_t, std::vector<std::int32_t>>, StateHash> seen;

    for (index_t r = 0; r < snap.bar_count(); ++r) {
        if (snap.alive_count(r) < m) continue;
        value_t len = anchored_length(snap, r, m);
        if (len <= 0) continue;
        std::vector<std::int32_t> ranks(static_cast<std::size_t>(m));
        for (std::int32_t t = 0; t < m; ++t) ranks[static_cast<std::size_t>(t)] = t + 1;
        seen.insert({r, ranks});
        heap.push(ColexEntry{len, r, std::move(ranks)});
    }

    while (static_cast<std::int64_t>(res.lengths.size()) < k && !heap.empty()) {
        ColexEntry e = heap.top();
        heap.pop();
        res.lengths.push_back(e.length);
        res.emissions.push_back(Emission{e.length, e.anchor, e.ranks.back(), 1});
        if (with_identities) res.identities->push_back(tuple_for(snap, e.anchor, e.ranks));

        const std::int32_t c_r = snap.alive_count(e.anchor);
        for (std::int32_t t = 0; t < m; ++t) {
            std::int32_t bound =
                (t + 1 < m) ? e.ranks[static_cast<std::size_t>(t) + 1] : c_r + 1;
            if (e.ranks[static_cast<std::size_t>(t)] + 1 >= bound) continue;
            std::vector<std::int32_t> next = e.ranks;
            ++next[static_cast<std::size_t>(t)];
            // length depends only on the largest rank; zero-length states are
            // pruned, their successors are zero as well
            value_t len = anchored_length(snap, e.anchor, next.back());
            if (len <= 0) continue;
            if (!seen.insert({e.anchor, next}).second) continue;
            heap.push(ColexEntry{len, e.anchor, std::move(next)});
        }
    }
    return res;
}

std::vector<std::vector<index_t>> expand_identities(const SweepSnapshots& snap, int order,
                                                    std::span<const Emission> emissions) {
    if (order < 2) throw std::invalid_argument("expand_identities: order must be >= 2");
    std::vector<std::vector<index_t>> tuples;
    std::vector<std::int32_t> ranks(static_cast<std::size_t>(order - 1));
    for (const Emission& e : emissions) {
        const std::int32_t m = order - 2; // free ranks below j
        for (std::int32_t t = 0; t < m; ++t) ranks[static_cast<std::size_t>(t)] = t + 1;
        ranks.back() = e.rank;
        for (std::uint64_t c = 0; c < e.copies; ++c) {
            tuples.push_back(tuple_for(snap, e.anchor, ranks));
            // colex successor among (order-2)-subsets of {1..j-1}
            std::int32_t t = 0;
            while (t < m) {
                std::int32_t bound = (t + 1 < m) ? ranks[static_cast<std::size_t>(t) + 1] : e.rank;
                if (ranks[static_cast<std::size_t>(t)] + 1 < bound) break;
                ++t;
            }
            if (t == m) break; // group exhausted; copies never exceed w_i(j)
            ++ranks[static_cast<std::size_t>(t)];
            for (std::int32_t s = 0; s < t; ++s) ranks[static_cast<std::size_t>(s)] = s + 1;
        }
    }
    return tuples;
}

} // namespace wedge
