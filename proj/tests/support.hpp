#pragma once

// Independent reference implementations used only by tests. Everything here
// avoids the library's sweep/tree machinery on purpose: naive quadratic
// scans against which the real data structures are checked.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wedge/barcode.hpp"

namespace wedge::testing {

// Alive set just before bar r's birth under the deaths-before-births order,
// sorted by (death desc, index asc): the rank order the tree must reproduce.
inline std::vector<Bar> naive_alive_set(const Barcode& bc, index_t r) {
    const Bar& anchor = bc.bars[static_cast<std::size_t>(r)];
    std::vector<Bar> alive;
    for (const Bar& s : bc.bars) {
        bool born_before =
            s.birth < anchor.birth || (s.birth == anchor.birth && s.index < anchor.index);
        if (born_before && s.death > anchor.birth) alive.push_back(s);
    }
    std::sort(alive.begin(), alive.end(), [](const Bar& a, const Bar& b) {
        if (a.death != b.death) return a.death > b.death;
        return a.index < b.index;
    });
    return alive;
}

struct TupleRecord {
    std::vector<index_t> bars; // ascending indices
    value_t birth;             // max birth
    value_t death;             // min death
    index_t anchor;            // last-processed birth at max birth time
    std::int32_t max_rank;     // largest neighbor rank within the anchor's alive set
};

// All valid i-tuples with their anchor and largest neighbor rank, via direct
// enumeration and naive alive sets.
inline std::vector<TupleRecord> enumerate_tuple_records(const Barcode& bc, int order) {
    std::vector<TupleRecord> records;
    const index_t m = bc.size();
    std::vector<index_t> pick(static_cast<std::size_t>(order));

    auto emit = [&]() {
        value_t max_b = -std::numeric_limits<value_t>::infinity();
        value_t min_d = std::numeric_limits<value_t>::infinity();
        for (index_t idx : pick) {
            max_b = std::max(max_b, bc.bars[static_cast<std::size_t>(idx)].birth);
            min_d = std::min(min_d, bc.bars[static_cast<std::size_t>(idx)].death);
        }
        if (!(max_b < min_d)) return;
        // anchor: among bars at the max birth time, the largest index
        index_t anchor = -1;
        for (index_t idx : pick)
            if (bc.bars[static_cast<std::size_t>(idx)].birth == max_b) anchor = std::max(anchor, idx);
        std::vector<Bar> alive = naive_alive_set(bc, anchor);
        std::int32_t max_rank = 0;
        for (index_t idx : pick) {
            if (idx == anchor) continue;
            for (std::size_t pos = 0; pos < alive.size(); ++pos)
                if (alive[pos].index == idx)
                    max_rank = std::max(max_rank, static_cast<std::int32_t>(pos) + 1);
        }
        records.push_back(TupleRecord{pick, max_b, min_d, anchor, max_rank});
    };

    auto rec = [&](auto&& self, int depth, index_t from) -> void {
        if (depth == order) {
            emit();
            return;
        }
        for (index_t idx = from; idx < m; ++idx) {
            pick[static_cast<std::size_t>(depth)] = idx;
            self(self, depth + 1, idx + 1);
        }
    };
    if (order <= m) rec(rec, 0, 0);
    return records;
}

inline std::vector<value_t> sorted_lengths(const std::vector<TupleRecord>& records) {
    std::vector<value_t> out;
    out.reserve(records.size());
    for (const TupleRecord& t : records) out.push_back(t.death - t.birth);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Exhaustive bottleneck oracle: minimize over every partial matching.
// Only usable for very small barcodes.
inline value_t exhaustive_bottleneck(const Barcode& x, const Barcode& y) {
    const auto& xs = x.bars;
    const auto& ys = y.bars;
    std::vector<int> assign(xs.size(), -1); // -1 diagonal, else y index
    std::vector<char> used(ys.size(), 0);
    value_t best = std::numeric_limits<value_t>::infinity();

    auto cost = [&]() {
        value_t c = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (assign[i] < 0)
                c = std::max(c, (xs[i].death - xs[i].birth) / 2);
            else {
                const Bar& b = ys[static_cast<std::size_t>(assign[i])];
                c = std::max(c, std::max(std::abs(xs[i].birth - b.birth),
                                         std::abs(xs[i].death - b.death)));
            }
        }
        for (std::size_t j = 0; j < ys.size(); ++j)
            if (!used[j]) c = std::max(c, (ys[j].death - ys[j].birth) / 2);
        return c;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == xs.size()) {
            best = std::min(best, cost());
            return;
        }
        assign[i] = -1;
        self(self, i + 1);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            assign[i] = static_cast<int>(j);
            self(self, i + 1);
            used[j] = 0;
            assign[i] = -1;
        }
    };
    rec(rec, 0);
    return best;
}

// Random barcode with mixed structure: exponential-ish lengths plus a dose of
// shared endpoints and exact duplicates, the tie cases the sweep order has to
// get right.
inline Barcode random_barcode(std::mt19937_64& eng, index_t max_bars, double l_mean = 0.15) {
    auto unit = [&]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    Barcode bc;
    index_t m = static_cast<index_t>(eng() % static_cast<std::uint64_t>(max_bars + 1));
    for (index_t r = 0; r < m; ++r) {
        double b, d;
        if (!bc.bars.empty() && eng() % 8 == 0) {
            // duplicate or share endpoints with an earlier bar
            const Bar& prev = bc.bars[eng() % bc.bars.size()];
            switch (eng() % 3) {
            case 0: b = prev.birth, d = prev.death; break;
            case 1: b = prev.birth, d = prev.birth + 0.05 + unit() * 0.5; break;
            default: d = prev.death, b = std::max(0.0, prev.death - 0.05 - unit() * 0.5);
            }
        } else {
            b = unit();
            d = b + 0.01 - l_mean * std::log(1.0 - unit());
        }
        if (!(b < d)) {
            --r;
            continue;
        }
        bc.bars.push_back(Bar{r, b, d});
    }
    return bc;
}

} // namespace wedge::testing
