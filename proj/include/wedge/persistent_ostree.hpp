#pragma once

#include <cstdint>
#include <vector>

#include "wedge/barcode.hpp"

namespace wedge {

// Bijection between the distinct death values of a barcode and coordinates
// {1,...,N}, sorted ascending.
class CompressedAxis {
public:
    CompressedAxis() = default;
    explicit CompressedAxis(std::vector<value_t> sorted_distinct);

    std::int32_t n() const { return static_cast<std::int32_t>(values_.size()); }
    // 1-based coordinate of a death value that is present on the axis.
    std::int32_t coord_of(value_t death) const;
    value_t value_at(std::int32_t coord) const;
    const std::vector<value_t>& values() const { return values_; }

private:
    std::vector<value_t> values_;
};

CompressedAxis compress(const Barcode& bc);

// Handle to one immutable tree version. Version 0 is the shared empty tree.
struct TreeRoot {
    std::int32_t node = 0;
    friend bool operator==(const TreeRoot&, const TreeRoot&) = default;
};

// Path-copying segment tree over the compressed death axis, one count per
// coordinate. Updates allocate O(log N) fresh nodes and return a new root;
// every old root stays valid and keeps answering exactly as it did when it
// was created. Child index 0 is a shared all-zero subtree, so the empty tree
// needs no storage and partial paths stay walkable.
class PersistentOSTree {
public:
    explicit PersistentOSTree(CompressedAxis axis);

    const CompressedAxis& axis() const { return axis_; }
    TreeRoot empty_root() const { return TreeRoot{0}; }

    // New version with the count at pos changed by delta (+1 or -1).
    // Decrementing a zero count throws std::logic_error: it means the caller's
    // sweep removed a bar that was never inserted.
    TreeRoot update(TreeRoot root, std::int32_t pos, int delta);

    // Total alive count in this version. O(1).
    std::int64_t size(TreeRoot root) const { return nodes_[root.node].count; }

    // Death value of the k-th alive bar in non-increasing death order,
    // counting multiplicity; 1 <= k <= size(root).
    value_t kth_from_right(TreeRoot root, std::int64_t k) const;
    std::int32_t kth_coord_from_right(TreeRoot root, std::int64_t k) const;

    // Number of alive bars at coordinates strictly greater than pos.
    std::int64_t count_greater(TreeRoot root, std::int32_t pos) const;

    std::size_t node_count() const { return nodes_.size(); }
    void reserve_updates(std::size_t n_updates);

private:
    struct Node {
        std::int32_t left = 0;
        std::int32_t right = 0;
        std::int64_t count = 0;
    };

    std::int32_t update_rec(std::int32_t node, std::int32_t lo, std::int32_t hi,
                            std::int32_t pos, int delta);
    std::int64_t count_suffix(std::int32_t node, std::int32_t lo, std::int32_t hi,
                              std::int32_t from) const;

    CompressedAxis axis_;
    std::vector<Node> nodes_;
};

} // namespace wedge
