#include "wedge/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wedge {

namespace detail {

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double exp_draw(std::mt19937_64& eng, double mean) {
    return -mean * std::log(1.0 - uniform01(eng));
}

} // namespace detail

Barcode generate(const GenConfig& cfg) {
    if (cfg.m < 0) throw std::invalid_argument("generate: M must be >= 0");
    if (!(cfg.l_mean > 0) || !std::isfinite(cfg.l_mean))
        throw std::invalid_argument("generate: l_mean must be positive and finite");

    std::mt19937_64 eng(cfg.seed);
    Barcode bc;
    bc.bars.reserve(static_cast<std::size_t>(cfg.m));
    for (std::int64_t r = 0; r < cfg.m; ++r) {
        double birth = 0, death = 0;
        // a zero draw or boundary rounding can make the bar empty; redraw
        for (int attempt = 0;; ++attempt) {
            birth = detail::uniform01(eng);
            double len = std::min(detail::exp_draw(eng, cfg.l_mean), 1.0 - birth);
            death = std::min(birth + len, 1.0);
            if (birth < death) break;
            if (attempt > 100) throw std::logic_error("generate: redraw loop stuck");
        }
        bc.bars.push_back(Bar{static_cast<index_t>(r), birth, death});
    }
    return bc;
}

} // namespace wedge
