#pragma once

#include <cstdint>
#include <random>

#include "wedge/barcode.hpp"

namespace wedge {

// Synthetic barcode family: births uniform on [0,1), exponential lengths with
// the given mean, truncated to the unit horizon. Expected concurrency at a
// random time is about M * l_mean.
struct GenConfig {
    std::int64_t m = 0;
    double l_mean = 0.05;
    std::uint64_t seed = 0;
};

// Deterministic per seed: mt19937_64 with fixed draw transforms (see README),
// so published seeds reproduce barcodes bit for bit.
Barcode generate(const GenConfig& cfg);

namespace detail {

// 53-bit uniform in [0, 1).
double uniform01(std::mt19937_64& eng);

// Inverse-CDF exponential with the given mean.
double exp_draw(std::mt19937_64& eng, double mean);

} // namespace detail

} // namespace wedge
