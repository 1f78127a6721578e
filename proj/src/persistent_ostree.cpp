#include "wedge/persistent_ostree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace wedge {

CompressedAxis::CompressedAxis(std::vector<value_t> sorted_distinct)
    : values_(std::move(sorted_distinct)) {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (!(values_[i - 1] < values_[i]))
            throw std::invalid_argument("CompressedAxis: values must be strictly increasing");
}

std::int32_t CompressedAxis::coord_of(value_t death) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), death);
    if (it == values_.end() || *it != death)
        throw std::out_of_range("CompressedAxis: value not on axis");
    return static_cast<std::int32_t>(it - values_.begin()) + 1;
}

value_t CompressedAxis::value_at(std::int32_t coord) const {
    if (coord < 1 || coord > n())
        throw std::out_of_range("CompressedAxis: coordinate out of range");
    return values_[static_cast<std::size_t>(coord) - 1];
}

CompressedAxis compress(const Barcode& bc) {
    std::vector<value_t> deaths;
    deaths.reserve(bc.bars.size());
    for (const Bar& bar : bc.bars) deaths.push_back(bar.death);
    std::sort(deaths.begin(), deaths.end());
    deaths.erase(std::unique(deaths.begin(), deaths.end()), deaths.end());
    return CompressedAxis(std::move(deaths));
}

PersistentOSTree::PersistentOSTree(CompressedAxis axis) : axis_(std::move(axis)) {
    nodes_.push_back(Node{}); // node 0: shared empty subtree
}

void PersistentOSTree::reserve_updates(std::size_t n_updates) {
    std::size_t levels = std::bit_width(static_cast<std::size_t>(std::max(axis_.n(), 1))) + 1;
    nodes_.reserve(nodes_.size() + n_updates * levels);
}

std::int32_t PersistentOSTree::update_rec(std::int32_t node, std::int32_t lo, std::int32_t hi,
                                          std::int32_t pos, int delta) {
    Node copy = nodes_[node];
    copy.count += delta;
    if (lo == hi) {
        if (copy.count < 0)
            throw std::logic_error("PersistentOSTree: count underflow at coordinate " +
                                   std::to_string(lo));
    } else {
        std::int32_t mid = lo + (hi - lo) / 2;
        if (pos <= mid)
            copy.left = update_rec(copy.left, lo, mid, pos, delta);
        else
            copy.right = update_rec(copy.right, mid + 1, hi, pos, delta);
    }
    nodes_.push_back(copy);
    return static_cast<std::int32_t>(nodes_.size()) - 1;
}

TreeRoot PersistentOSTree::update(TreeRoot root, std::int32_t pos, int delta) {
    if (pos < 1 || pos > axis_.n())
        throw std::out_of_range("PersistentOSTree: position out of range");
    return TreeRoot{update_rec(root.node, 1, axis_.n(), pos, delta)};
}

std::int32_t PersistentOSTree::kth_coord_from_right(TreeRoot root, std::int64_t k) const {
    if (k < 1 || k > size(root))
        throw std::out_of_range("PersistentOSTree: k out of range");
    std::int32_t node = root.node;
    std::int32_t lo = 1, hi = axis_.n();
    while (lo < hi) {
        std::int32_t mid = lo + (hi - lo) / 2;
        std::int64_t right_count = nodes_[nodes_[node].right].count;
        if (k <= right_count) {
            node = nodes_[node].right;
            lo = mid + 1;
        } else {
            k -= right_count;
            node = nodes_[node].left;
            hi = mid;
        }
    }
    return lo;
}

value_t PersistentOSTree::kth_from_right(TreeRoot root, std::int64_t k) const {
    return axis_.value_at(kth_coord_from_right(root, k));
}

std::int64_t PersistentOSTree::count_suffix(std::int32_t node, std::int32_t lo, std::int32_t hi,
                                            std::int32_t from) const {
    if (node == 0 || from > hi) return 0;
    if (from <= lo) return nodes_[node].count;
    std::int32_t mid = lo + (hi - lo) / 2;
    return count_suffix(nodes_[node].left, lo, mid, from) +
           count_suffix(nodes_[node].right, mid + 1, hi, from);
}

std::int64_t PersistentOSTree::count_greater(TreeRoot root, std::int32_t pos) const {
    if (axis_.n() == 0 || pos >= axis_.n()) return 0;
    if (pos < 1) return size(root);
    return count_suffix(root.node, 1, axis_.n(), pos + 1);
}

} // namespace wedge
