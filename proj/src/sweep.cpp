#include "wedge/sweep.hpp"

#include <stdexcept>
#include <string>

namespace wedge {

SweepSnapshots::SweepSnapshots(Barcode bc) : barcode_(std::move(bc)), tree_(compress(barcode_)) {}

const AnchorSnapshot& SweepSnapshots::anchor(index_t r) const {
    if (r < 0 || r >= bar_count())
        throw std::out_of_range("SweepSnapshots: bar index " + std::to_string(r));
    return anchors_[static_cast<std::size_t>(r)];
}

value_t SweepSnapshots::death_at_rank(index_t r, std::int32_t j) const {
    const AnchorSnapshot& snap = anchor(r);
    if (j < 1 || j > snap.alive_count)
        throw std::out_of_range("SweepSnapshots: rank " + std::to_string(j) + " of anchor " +
                                std::to_string(r));
    return tree_.kth_from_right(snap.root, j);
}

bool SweepSnapshots::alive_just_before(index_t candidate, index_t r) const {
    const Bar& s = barcode_.bars[static_cast<std::size_t>(candidate)];
    const Bar& a = barcode_.bars[static_cast<std::size_t>(r)];
    bool born_before = s.birth < a.birth || (s.birth == a.birth && s.index < a.index);
    return born_before && s.death > a.birth; // deaths at a.birth precede the birth
}

index_t SweepSnapshots::bar_at_rank(index_t r, std::int32_t j) const {
    const AnchorSnapshot& snap = anchor(r);
    if (j < 1 || j > snap.alive_count)
        throw std::out_of_range("SweepSnapshots: rank " + std::to_string(j) + " of anchor " +
                                std::to_string(r));
    std::int32_t coord = tree_.kth_coord_from_right(snap.root, j);
    // j falls inside the run of ranks sharing this death value; the offset in
    // the run picks among alive bars with that death, ascending index.
    std::int64_t offset = j - tree_.count_greater(snap.root, coord) - 1;
    for (index_t candidate : bars_by_coord_[static_cast<std::size_t>(coord) - 1]) {
        if (!alive_just_before(candidate, r)) continue;
        if (offset == 0) return candidate;
        --offset;
    }
    throw std::logic_error("SweepSnapshots: rank resolution ran past the alive set");
}

SweepSnapshots run_sweep(Barcode bc) {
    validate_barcode(bc);
    SweepSnapshots snap(std::move(bc));
    const Barcode& bars = snap.barcode_;
    const index_t m = bars.size();

    snap.bars_by_coord_.resize(static_cast<std::size_t>(snap.tree_.axis().n()));
    for (const Bar& bar : bars.bars)
        snap.bars_by_coord_[static_cast<std::size_t>(snap.tree_.axis().coord_of(bar.death)) - 1]
            .push_back(bar.index);

    snap.tree_.reserve_updates(2 * static_cast<std::size_t>(m));
    snap.anchors_.resize(static_cast<std::size_t>(m));

    TreeRoot current = snap.tree_.empty_root();
    for (const Event& ev : build_event_list(bars)) {
        const Bar& bar = bars.bars[static_cast<std::size_t>(ev.bar_index)];
        std::int32_t coord = snap.tree_.axis().coord_of(bar.death);
        if (ev.kind == EventKind::Death) {
            current = snap.tree_.update(current, coord, -1);
        } else {
            // Snapshot before inserting r so the alive set excludes r itself.
            snap.anchors_[static_cast<std::size_t>(ev.bar_index)] =
                AnchorSnapshot{current, static_cast<std::int32_t>(snap.tree_.size(current))};
            current = snap.tree_.update(current, coord, +1);
        }
    }
    snap.final_root_ = current;
    return snap;
}

} // namespace wedge
