#pragma once

#include <json.hpp>

#include "wedge/bench.hpp"
#include "wedge/topk.hpp"

// JSON projections of the report types; numeric fields keep full round-trip
// precision (nlohmann emits shortest-exact doubles).

namespace wedge {

inline void to_json(nlohmann::json& j, const Emission& e) {
    j = nlohmann::json{{"length", e.length},
                       {"anchor", e.anchor},
                       {"rank", e.rank},
                       {"copies", e.copies}};
}

inline void from_json(const nlohmann::json& j, Emission& e) {
    j.at("length").get_to(e.length);
    j.at("anchor").get_to(e.anchor);
    j.at("rank").get_to(e.rank);
    j.at("copies").get_to(e.copies);
}

inline void to_json(nlohmann::json& j, const TopKResult& res) {
    j = nlohmann::json{{"lengths", res.lengths}, {"emissions", res.emissions}};
    if (res.identities) j["identities"] = *res.identities;
}

inline void from_json(const nlohmann::json& j, TopKResult& res) {
    j.at("lengths").get_to(res.lengths);
    j.at("emissions").get_to(res.emissions);
    if (j.contains("identities"))
        res.identities = j.at("identities").get<std::vector<std::vector<index_t>>>();
    else
        res.identities.reset();
}

inline void to_json(nlohmann::json& j, const BenchConfig& c) {
    j = nlohmann::json{{"m", c.m},       {"l_mean", c.l_mean}, {"i", c.order},
                       {"k", c.k},       {"seed", c.seed},     {"reps", c.reps}};
}

inline void from_json(const nlohmann::json& j, BenchConfig& c) {
    j.at("m").get_to(c.m);
    j.at("l_mean").get_to(c.l_mean);
    j.at("i").get_to(c.order);
    j.at("k").get_to(c.k);
    j.at("seed").get_to(c.seed);
    j.at("reps").get_to(c.reps);
}

inline void to_json(nlohmann::json& j, const BenchReport& r) {
    j = nlohmann::json{{"setting", r.config},
                       {"k_all", r.k_all},
                       {"t_baseline_s", r.t_baseline_s},
                       {"t_ours_s", r.t_ours_s},
                       {"speedup", r.speedup}};
}

inline void from_json(const nlohmann::json& j, BenchReport& r) {
    j.at("setting").get_to(r.config);
    j.at("k_all").get_to(r.k_all);
    j.at("t_baseline_s").get_to(r.t_baseline_s);
    j.at("t_ours_s").get_to(r.t_ours_s);
    j.at("speedup").get_to(r.speedup);
}

} // namespace wedge
