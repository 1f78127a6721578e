#pragma once

#include <cstdint>
#include <vector>

#include "wedge/barcode.hpp"
#include "wedge/persistent_ostree.hpp"

namespace wedge {

struct AnchorSnapshot {
    TreeRoot root;               // alive multiset just before this bar's birth
    std::int32_t alive_count = 0;
};

// Result of the preprocessing sweep: one immutable tree snapshot per birth,
// taken before inserting the bar itself, under the deaths-before-births tie
// order. Owns the tree arena, so snapshots stay queryable for the lifetime of
// this object; everything here is read-only after run_sweep and safe to share
// across concurrent queries.
class SweepSnapshots {
public:
    const Barcode& input() const { return barcode_; }
    const PersistentOSTree& tree() const { return tree_; }
    index_t bar_count() const { return barcode_.size(); }

    const AnchorSnapshot& anchor(index_t r) const;
    std::int32_t alive_count(index_t r) const { return anchor(r).alive_count; }

    // Death value of the j-th alive neighbor of anchor r in non-increasing
    // death order, 1 <= j <= alive_count(r).
    value_t death_at_rank(index_t r, std::int32_t j) const;

    // Bar index realizing that rank. Among alive bars with equal death value,
    // ranks go by ascending bar index.
    index_t bar_at_rank(index_t r, std::int32_t j) const;

    TreeRoot final_root() const { return final_root_; }

private:
    friend SweepSnapshots run_sweep(Barcode bc);
    explicit SweepSnapshots(Barcode bc);

    bool alive_just_before(index_t candidate, index_t r) const;

    Barcode barcode_;
    PersistentOSTree tree_;
    std::vector<AnchorSnapshot> anchors_;
    std::vector<std::vector<index_t>> bars_by_coord_; // per death coordinate, ascending index
    TreeRoot final_root_;
};

// O(M log M) preprocessing sweep over the event list.
SweepSnapshots run_sweep(Barcode bc);

// Lazily indexed view of the non-increasing death sequence d_r(1) >= ... >=
// d_r(c_r); nothing is materialized.
class AliveDeaths {
public:
    AliveDeaths(const SweepSnapshots& snap, index_t r) : snap_(&snap), r_(r) {}
    std::int32_t size() const { return snap_->alive_count(r_); }
    value_t operator[](std::int32_t j) const { return snap_->death_at_rank(r_, j); }

private:
    const SweepSnapshots* snap_;
    index_t r_;
};

inline AliveDeaths alive_deaths(const SweepSnapshots& snap, index_t r) {
    return AliveDeaths(snap, r);
}

} // namespace wedge
