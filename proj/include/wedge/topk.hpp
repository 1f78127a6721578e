#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wedge/decomposition.hpp"
#include "wedge/sweep.hpp"

namespace wedge {

// One heap pop: `copies` intervals of the same length from anchor `anchor`,
// largest chosen neighbor rank `rank`.
struct Emission {
    value_t length = 0;
    index_t anchor = 0;
    std::int32_t rank = 0;
    std::uint64_t copies = 0;

    friend bool operator==(const Emission&, const Emission&) = default;
};

struct TopKResult {
    std::vector<value_t> lengths;     // non-increasing, min(K, total) entries
    std::vector<Emission> emissions;  // pop order; copies sum to lengths.size()
    // When requested: per output interval, the i bar indices realizing it
    // (ascending), aligned with `lengths`.
    std::optional<std::vector<std::vector<index_t>>> identities;

    friend bool operator==(const TopKResult&, const TopKResult&) = default;
};

// Grouped best-first extraction of the K longest intervals of the order-i
// exterior-power barcode. Each heap entry is the head of one anchor's
// monotone stream; a pop bulk-emits all w_i(j) equal-length copies (clamped
// to what is still needed) and advances that stream by one rank. At most K
// pops, one order-statistics query each.
TopKResult topk_grouped(const SweepSnapshots& snap, int order, std::int64_t k);

// Unbundled variant: heap states are strictly increasing (i-1)-tuples of
// neighbor ranks, each pop emits exactly one interval and expands at most
// i-1 rank-increment successors, deduplicated. Same length multiset as the
// grouped engine; with_identities fills per-interval bar tuples.
TopKResult topk_colex(const SweepSnapshots& snap, int order, std::int64_t k,
                      bool with_identities = false);

// Baseline: full decomposition, sort, truncate. Same output as topk_grouped
// including emission order.
TopKResult topk_enum(const SweepSnapshots& snap, int order, std::int64_t k);

// Expands grouped emissions into explicit bar tuples: for each emission the
// first `copies` (i-2)-subsets of {1..j-1} in colex order, each completed
// with rank j, ranks mapped to bar indices and joined with the anchor.
std::vector<std::vector<index_t>> expand_identities(const SweepSnapshots& snap, int order,
                                                    std::span<const Emission> emissions);

} // namespace wedge
