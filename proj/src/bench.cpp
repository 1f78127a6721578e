#include "wedge/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "wedge/decomposition.hpp"
#include "wedge/generator.hpp"
#include "wedge/topk.hpp"

namespace wedge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Enumerate-everything baseline: expand the full decomposition into a flat
// length vector, then heap-select the K largest.
std::vector<value_t> baseline_select(const SweepSnapshots& snap, int order, std::int64_t k) {
    std::vector<value_t> all;
    for (const DecompositionItem& item : enumerate_decomposition(snap, order)) {
        for (std::uint64_t c = 0; c < item.weight; ++c) all.push_back(item.length);
    }
    std::make_heap(all.begin(), all.end());
    std::vector<value_t> top;
    std::int64_t take = std::min<std::int64_t>(k, static_cast<std::int64_t>(all.size()));
    top.reserve(static_cast<std::size_t>(take));
    for (std::int64_t i = 0; i < take; ++i) {
        std::pop_heap(all.begin(), all.end());
        top.push_back(all.back());
        all.pop_back();
    }
    return top;
}

} // namespace

BenchReport run_benchmark(const BenchConfig& cfg) {
    if (cfg.k < 0) throw std::invalid_argument("bench: k must be >= 0");
    if (cfg.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");

    BenchReport report;
    report.config = cfg;

    Barcode bc = generate(GenConfig{cfg.m, cfg.l_mean, cfg.seed});
    SweepSnapshots prebuilt = run_sweep(bc);
    report.k_all = decomposition_total(prebuilt, cfg.order);
    if (report.k_all > 100'000'000ull)
        throw GuardError("bench: baseline expansion of " + std::to_string(report.k_all) +
                         " intervals exceeds the guard");

    std::vector<value_t> baseline_lengths, ours_lengths;
    report.t_baseline_s = std::numeric_limits<double>::infinity();
    report.t_ours_s = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < cfg.reps; ++rep) {
        auto start = Clock::now();
        baseline_lengths = baseline_select(prebuilt, cfg.order, cfg.k);
        report.t_baseline_s = std::min(report.t_baseline_s, seconds_since(start));

        start = Clock::now();
        SweepSnapshots snap = run_sweep(bc);
        ours_lengths = topk_grouped(snap, cfg.order, cfg.k).lengths;
        report.t_ours_s = std::min(report.t_ours_s, seconds_since(start));
    }
    if (baseline_lengths != ours_lengths)
        throw std::logic_error("bench: baseline and best-first disagree");

    report.speedup = report.t_baseline_s / report.t_ours_s;
    return report;
}

} // namespace wedge
