#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "wedge/topk.hpp"

using namespace wedge;

namespace {

std::vector<value_t> oracle_lengths(const Barcode& bc, int order) {
    std::vector<value_t> lens;
    for (const Interval& iv : brute_force_lambda(bc, order)) lens.push_back(iv.length());
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return lens;
}

std::vector<value_t> prefix(const std::vector<value_t>& v, std::int64_t k) {
    return {v.begin(), v.begin() + std::min<std::int64_t>(k, static_cast<std::int64_t>(v.size()))};
}

} // namespace

TEST_SUITE_BEGIN("topk");

TEST_CASE("staircase examples") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 3\n1 4\n2 5\n"));
    CHECK(topk_grouped(snap, 2, 2).lengths == std::vector<value_t>{2.0, 2.0});
    CHECK(topk_grouped(snap, 2, 10).lengths == std::vector<value_t>{2.0, 2.0, 1.0});
    CHECK(topk_grouped(snap, 2, 0).lengths.empty());
}

TEST_CASE("empty barcode yields empty results") {
    SweepSnapshots snap = run_sweep(Barcode{});
    CHECK(topk_grouped(snap, 2, 5).lengths.empty());
    CHECK(topk_colex(snap, 3, 5).lengths.empty());
    CHECK(topk_enum(snap, 2, 5).lengths.empty());
}

TEST_CASE("two copies of the same bar overlap fully") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 4\n0 4\n"));
    CHECK(topk_grouped(snap, 2, 1).lengths == std::vector<value_t>{4.0});
}

TEST_CASE("colex identity on the staircase triple") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 3\n1 4\n2 5\n"));
    TopKResult res = topk_colex(snap, 3, 1, true);
    REQUIRE(res.lengths == std::vector<value_t>{1.0});
    REQUIRE(res.emissions.size() == 1);
    CHECK(res.emissions[0].anchor == 2);
    REQUIRE(res.identities.has_value());
    CHECK((*res.identities)[0] == std::vector<index_t>{0, 1, 2});
}

TEST_CASE("identity expansion in colex order") {
    // one emission, rank 3, two copies at order 3: subsets {1,3} then {2,3}
    SweepSnapshots snap = run_sweep(parse_barcode("0 10\n1 9\n2 8\n3 7\n"));
    REQUIRE(snap.alive_count(3) == 3);
    Emission e{anchored_length(snap, 3, 3), 3, 3, 2};
    auto tuples = expand_identities(snap, 3, std::vector<Emission>{e});
    REQUIRE(tuples.size() == 2);
    // ranks {1,3} are bars 0 and 2; ranks {2,3} are bars 1 and 2
    CHECK(tuples[0] == std::vector<index_t>{0, 2, 3});
    CHECK(tuples[1] == std::vector<index_t>{1, 2, 3});
}

TEST_CASE("order-2 expansion is a single rank") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 3\n1 4\n"));
    TopKResult res = topk_grouped(snap, 2, 5);
    auto tuples = expand_identities(snap, 2, res.emissions);
    REQUIRE(tuples.size() == res.lengths.size());
    CHECK(tuples[0] == std::vector<index_t>{0, 1});
}

TEST_CASE("grouped matches brute force for every K") {
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Barcode bc = testing::random_barcode(eng, 25);
        SweepSnapshots snap = run_sweep(bc);
        for (int order : {2, 3, 4}) {
            std::vector<value_t> oracle = oracle_lengths(bc, order);
            std::int64_t total = static_cast<std::int64_t>(oracle.size());
            for (std::int64_t k : {std::int64_t{0}, std::int64_t{1}, total / 2, total,
                                   total + 3}) {
                if (k < 0) continue;
                TopKResult res = topk_grouped(snap, order, k);
                REQUIRE(res.lengths == prefix(oracle, k));
            }
        }
    }
}

TEST_CASE("grouped, colex and enum agree") {
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Barcode bc = testing::random_barcode(eng, 25);
        SweepSnapshots snap = run_sweep(bc);
        for (int order : {2, 3, 4}) {
            std::uint64_t total = decomposition_total(snap, order);
            for (std::int64_t k :
                 {std::int64_t{1}, static_cast<std::int64_t>(total / 2) + 1,
                  static_cast<std::int64_t>(total) + 2}) {
                TopKResult grouped = topk_grouped(snap, order, k);
                TopKResult colex = topk_colex(snap, order, k);
                TopKResult enumd = topk_enum(snap, order, k);
                REQUIRE(grouped.lengths == colex.lengths);
                REQUIRE(grouped.lengths == enumd.lengths);
                REQUIRE(grouped.emissions == enumd.emissions);
            }
        }
    }
}

TEST_CASE("results are deterministic and monotone") {
    std::mt19937_64 eng(29);
    Barcode bc = testing::random_barcode(eng, 40);
    SweepSnapshots snap = run_sweep(bc);
    TopKResult a = topk_grouped(snap, 2, 50);
    TopKResult b = topk_grouped(snap, 2, 50);
    CHECK(a == b);
    CHECK(std::is_sorted(a.lengths.rbegin(), a.lengths.rend()));
    std::uint64_t copies = 0;
    value_t prev = std::numeric_limits<value_t>::infinity();
    for (const Emission& e : a.emissions) {
        copies += e.copies;
        CHECK(e.length <= prev);
        prev = e.length;
    }
    CHECK(copies == a.lengths.size());

    TopKResult c1 = topk_colex(snap, 3, 30, true);
    TopKResult c2 = topk_colex(snap, 3, 30, true);
    CHECK(c1 == c2);
}

TEST_CASE("every expanded tuple realizes its recorded length and anchor") {
    std::mt19937_64 eng(37);
    for (int trial = 0; trial < 25; ++trial) {
        Barcode bc = testing::random_barcode(eng, 20);
        SweepSnapshots snap = run_sweep(bc);
        for (int order : {2, 3, 4}) {
            TopKResult res = topk_grouped(snap, order, 40);
            auto tuples = expand_identities(snap, order, res.emissions);
            REQUIRE(tuples.size() == res.lengths.size());
            std::size_t p = 0;
            for (const Emission& e : res.emissions) {
                for (std::uint64_t c = 0; c < e.copies; ++c, ++p) {
                    const auto& tuple = tuples[p];
                    REQUIRE(tuple.size() == static_cast<std::size_t>(order));
                    value_t max_b = -std::numeric_limits<value_t>::infinity();
                    value_t min_d = std::numeric_limits<value_t>::infinity();
                    index_t anchor = -1;
                    for (index_t idx : tuple) {
                        const Bar& bar = bc.bars[static_cast<std::size_t>(idx)];
                        max_b = std::max(max_b, bar.birth);
                        min_d = std::min(min_d, bar.death);
                    }
                    for (index_t idx : tuple)
                        if (bc.bars[static_cast<std::size_t>(idx)].birth == max_b)
                            anchor = std::max(anchor, idx);
                    REQUIRE(min_d - max_b == res.lengths[p]);
                    REQUIRE(anchor == e.anchor);
                    REQUIRE(std::adjacent_find(tuple.begin(), tuple.end()) == tuple.end());
                }
            }
        }
    }
}

TEST_CASE("colex tuples are unique") {
    std::mt19937_64 eng(41);
    Barcode bc = testing::random_barcode(eng, 18);
    SweepSnapshots snap = run_sweep(bc);
    TopKResult res = topk_colex(snap, 3, 1'000'000, true);
    auto sorted = *res.identities;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(res.lengths.size() == brute_force_lambda(bc, 3).size());
}

TEST_CASE("invalid queries") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 1\n"));
    CHECK_THROWS_AS(topk_grouped(snap, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(topk_grouped(snap, 2, -1), std::invalid_argument);
}

TEST_SUITE_END();
