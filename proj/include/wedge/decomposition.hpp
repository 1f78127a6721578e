#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "wedge/sweep.hpp"

namespace wedge {

// Interval of the exterior-power barcode, closed-open.
struct Interval {
    value_t birth = 0;
    value_t death = 0;

    value_t length() const { return death - birth; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Length of the order-i interval anchored at r whose largest chosen neighbor
// rank is j: max{0, min{d_r, d_r(j)} - b_r}. Non-increasing in j.
value_t anchored_length(const SweepSnapshots& snap, index_t r, std::int32_t j);

// min{C(j-1, i-2), cap}. The true binomial overflows 64 bits for modest j at
// higher orders; no consumer ever needs more than cap copies, so the product
// saturates instead.
std::uint64_t binomial_weight(int order, std::int64_t j, std::uint64_t cap);

inline constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

// One rank group of one anchor's stream: weight copies of an interval of this
// length, all sharing birth b_anchor.
struct DecompositionItem {
    value_t length = 0;
    index_t anchor = 0;
    std::int32_t rank = 0;
    std::uint64_t weight = 0;

    friend bool operator==(const DecompositionItem&, const DecompositionItem&) = default;
};

// Full anchored rank-grouped decomposition: every positive-length group of
// every anchor, anchors ascending, ranks ascending. Weights are clamped at
// weight_cap (saturating when left at kNoCap).
std::vector<DecompositionItem> enumerate_decomposition(const SweepSnapshots& snap, int order,
                                                       std::uint64_t weight_cap = kNoCap);

// Total interval count of the order-i barcode, saturating at 2^64-1.
std::uint64_t decomposition_total(const SweepSnapshots& snap, int order);

// Reference path: every i-subset of bars with a common overlap contributes
// [max birth, min death). Exponential in i; refuses when C(M, i) exceeds
// tuple_guard. Output order follows index-increasing tuple enumeration.
std::vector<Interval> brute_force_lambda(const Barcode& bc, int order,
                                         std::uint64_t tuple_guard = 10'000'000);

} // namespace wedge
