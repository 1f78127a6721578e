#include "wedge/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "wedge/sweep.hpp"

namespace wedge {

std::vector<value_t> length_vector(const TopKResult& res, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("length_vector: k must be >= 0");
    std::vector<value_t> out(static_cast<std::size_t>(k), 0.0);
    std::size_t take = std::min<std::size_t>(res.lengths.size(), static_cast<std::size_t>(k));
    std::copy_n(res.lengths.begin(), take, out.begin());
    return out;
}

namespace {

value_t linf_dist(const Bar& a, const Bar& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

value_t diag_dist(const Bar& a) { return (a.death - a.birth) / 2; }

// Kuhn's augmenting-path matching of `left` bars into the other side.
struct Matcher {
    const std::vector<Bar>& left;
    const std::vector<Bar>& right;
    value_t eps;
    std::vector<int> match_right; // right slot -> position in `left_order`, -1 free
    std::vector<char> visited;

    bool augment(int li) {
        for (std::size_t rj = 0; rj < right.size(); ++rj) {
            if (visited[rj]) continue;
            if (linf_dist(left[static_cast<std::size_t>(li)], right[rj]) > eps) continue;
            visited[rj] = 1;
            if (match_right[rj] < 0 || augment(match_right[rj])) {
                match_right[rj] = li;
                return true;
            }
        }
        return false;
    }
};

// Feasibility of an eps-matching: a matching within eps that covers every bar
// farther than eps from the diagonal, on either side. A matching saturating
// the far bars of X and one saturating the far bars of Y always combine into
// a single matching saturating both (components of their symmetric difference
// never strand a far bar on each end), so two one-sided runs suffice.
bool saturates_far(const std::vector<Bar>& far_side, const std::vector<Bar>& other,
                   value_t eps) {
    Matcher m{far_side, other, eps, std::vector<int>(other.size(), -1), {}};
    for (std::size_t i = 0; i < far_side.size(); ++i) {
        m.visited.assign(other.size(), 0);
        if (!m.augment(static_cast<int>(i))) return false;
    }
    return true;
}

bool feasible(const std::vector<Bar>& xs, const std::vector<Bar>& ys, value_t eps) {
    std::vector<Bar> far_x, far_y;
    for (const Bar& b : xs)
        if (diag_dist(b) > eps) far_x.push_back(b);
    for (const Bar& b : ys)
        if (diag_dist(b) > eps) far_y.push_back(b);
    return saturates_far(far_x, ys, eps) && saturates_far(far_y, xs, eps);
}

std::vector<value_t> candidate_epsilons(const Barcode& x, const Barcode& y) {
    std::vector<value_t> cands{0.0};
    for (const Bar& b : x.bars) cands.push_back(diag_dist(b));
    for (const Bar& b : y.bars) cands.push_back(diag_dist(b));
    for (const Bar& a : x.bars)
        for (const Bar& b : y.bars) cands.push_back(linf_dist(a, b));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

void check_guard(const Barcode& x, const Barcode& y, std::size_t size_guard) {
    validate_barcode(x);
    validate_barcode(y);
    std::size_t total = x.bars.size() + y.bars.size();
    if (total > size_guard)
        throw GuardError("bottleneck: instance size " + std::to_string(total) +
                         " exceeds guard " + std::to_string(size_guard));
}

} // namespace

value_t bottleneck_distance(const Barcode& x, const Barcode& y, std::size_t size_guard) {
    check_guard(x, y, size_guard);
    std::vector<value_t> cands = candidate_epsilons(x, y);
    // feasibility is monotone in eps, and the infimum is one of the candidates
    auto it = std::partition_point(cands.begin(), cands.end(), [&](value_t eps) {
        return !feasible(x.bars, y.bars, eps);
    });
    if (it == cands.end()) throw std::logic_error("bottleneck: no feasible candidate");
    return *it;
}

BottleneckMatching bottleneck_matching(const Barcode& x, const Barcode& y,
                                       std::size_t size_guard) {
    BottleneckMatching out;
    out.epsilon = bottleneck_distance(x, y, size_guard);

    // Realize one matching at the optimum via the diagonal-augmented graph:
    // left = X bars + one dummy per Y bar, right = Y bars + one dummy per X
    // bar; a bar may pair with its own dummy when close enough to the
    // diagonal, dummies pair freely with dummies.
    const auto& xs = x.bars;
    const auto& ys = y.bars;
    const std::size_t n = xs.size(), mm = ys.size();
    const std::size_t left_n = n + mm, right_n = mm + n;
    std::vector<int> match_right(right_n, -1), match_left(left_n, -1);
    std::vector<char> visited(right_n, 0);

    auto allowed = [&](std::size_t l, std::size_t r) {
        bool l_real = l < n, r_real = r < mm;
        if (l_real && r_real) return linf_dist(xs[l], ys[r]) <= out.epsilon;
        if (l_real) return r == mm + l && diag_dist(xs[l]) <= out.epsilon;
        if (r_real) return l == n + r && diag_dist(ys[r]) <= out.epsilon;
        return true;
    };
    std::function<bool(std::size_t)> augment = [&](std::size_t l) -> bool {
        for (std::size_t r = 0; r < right_n; ++r) {
            if (visited[r] || !allowed(l, r)) continue;
            visited[r] = 1;
            if (match_right[r] < 0 || augment(static_cast<std::size_t>(match_right[r]))) {
                match_right[r] = static_cast<int>(l);
                match_left[l] = static_cast<int>(r);
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < left_n; ++l) {
        visited.assign(right_n, 0);
        if (!augment(l))
            throw std::logic_error("bottleneck: imperfect matching at the optimum");
    }
    for (std::size_t l = 0; l < n; ++l) {
        std::size_t r = static_cast<std::size_t>(match_left[l]);
        if (r < mm)
            out.pairs.emplace_back(static_cast<index_t>(l), static_cast<index_t>(r));
        else
            out.unmatched_x.push_back(static_cast<index_t>(l));
    }
    for (std::size_t r = 0; r < mm; ++r)
        if (static_cast<std::size_t>(match_right[r]) >= n)
            out.unmatched_y.push_back(static_cast<index_t>(r));
    return out;
}

StabilityCheck check_topk_stability(const Barcode& x, const Barcode& y, int order,
                                    std::int64_t k, value_t tolerance,
                                    std::size_t size_guard) {
    std::vector<value_t> lx = length_vector(topk_grouped(run_sweep(x), order, k), k);
    std::vector<value_t> ly = length_vector(topk_grouped(run_sweep(y), order, k), k);
    StabilityCheck chk;
    for (std::int64_t i = 0; i < k; ++i)
        chk.lhs = std::max(chk.lhs, std::abs(lx[static_cast<std::size_t>(i)] -
                                             ly[static_cast<std::size_t>(i)]));
    chk.rhs = 2 * bottleneck_distance(x, y, size_guard);
    chk.holds = chk.lhs <= chk.rhs + tolerance;
    return chk;
}

Barcode element_uniqueness_instance(std::span<const double> xs) {
    Barcode bc;
    bc.bars.reserve(xs.size());
    for (std::size_t r = 0; r < xs.size(); ++r) {
        if (!(xs[r] >= 0.0 && xs[r] <= 0.5))
            throw std::invalid_argument("element_uniqueness_instance: value " +
                                        std::to_string(r) + " outside [0, 1/2]");
        bc.bars.push_back(Bar{static_cast<index_t>(r), xs[r], xs[r] + 1.0});
    }
    return bc;
}

} // namespace wedge
