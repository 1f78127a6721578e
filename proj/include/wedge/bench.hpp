#pragma once

#include <cstdint>

#include "wedge/barcode.hpp"

namespace wedge {

struct BenchConfig {
    std::int64_t m = 3000;
    double l_mean = 0.05;
    int order = 2;
    std::int64_t k = 10000;
    std::uint64_t seed = 1;
    int reps = 3;

    friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

struct BenchReport {
    BenchConfig config;
    std::uint64_t k_all = 0;  // full size of the order-i barcode
    double t_baseline_s = 0;  // full enumeration + heap selection
    double t_ours_s = 0;      // sweep + grouped best-first
    double speedup = 0;       // t_baseline_s / t_ours_s

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Times the enumeration baseline against the best-first engine on one
// generated barcode, best of `reps` runs each, and checks that both produce
// identical Top-K lengths. The baseline reuses a prebuilt sweep; ours is
// timed end to end including its own sweep.
BenchReport run_benchmark(const BenchConfig& cfg);

} // namespace wedge
