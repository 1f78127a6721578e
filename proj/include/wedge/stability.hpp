#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wedge/barcode.hpp"
#include "wedge/topk.hpp"

namespace wedge {

// First k lengths of a Top-K result, zero-padded to exactly k entries.
// The result must have been computed with a request of at least k.
std::vector<value_t> length_vector(const TopKResult& res, std::int64_t k);

// A realized epsilon-matching: matched cross pairs are within L-infinity
// distance epsilon, every unmatched bar is within epsilon of the diagonal.
struct BottleneckMatching {
    value_t epsilon = 0;
    std::vector<std::pair<index_t, index_t>> pairs;
    std::vector<index_t> unmatched_x;
    std::vector<index_t> unmatched_y;
};

// Exact bottleneck distance for desk-scale barcodes. The infimum is attained
// at one of finitely many candidates (cross-pair L-infinity distances,
// half-lengths, zero); feasibility per candidate is decided by augmenting-path
// bipartite matching. Refuses with GuardError when |X|+|Y| > size_guard.
value_t bottleneck_distance(const Barcode& x, const Barcode& y, std::size_t size_guard = 200);

// Same search, plus an explicit optimal matching.
BottleneckMatching bottleneck_matching(const Barcode& x, const Barcode& y,
                                       std::size_t size_guard = 200);

struct StabilityCheck {
    value_t lhs = 0; // |L_K(X,i) - L_K(Y,i)|_inf
    value_t rhs = 0; // 2 * bottleneck distance
    bool holds = false;
};

// Checks the 2-Lipschitz bound of the Top-K length vector under bottleneck
// perturbation of the input barcode.
StabilityCheck check_topk_stability(const Barcode& x, const Barcode& y, int order,
                                    std::int64_t k, value_t tolerance = 1e-9,
                                    std::size_t size_guard = 200);

// M bars [x_r, x_r+1) from values in [0, 1/2]; every pair overlaps, and the
// Top-1 order-2 length equals 1 minus the minimum pairwise gap.
Barcode element_uniqueness_instance(std::span<const double> xs);

} // namespace wedge
