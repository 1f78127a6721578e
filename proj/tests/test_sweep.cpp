#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "wedge/sweep.hpp"

using namespace wedge;

TEST_SUITE_BEGIN("sweep");

TEST_CASE("snapshot counts on a staircase") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 3\n1 4\n2 5\n"));
    CHECK(snap.alive_count(0) == 0);
    CHECK(snap.alive_count(1) == 1);
    CHECK(snap.alive_count(2) == 2);
    CHECK(snap.death_at_rank(1, 1) == 3.0);
    CHECK(snap.death_at_rank(2, 1) == 4.0);
    CHECK(snap.death_at_rank(2, 2) == 3.0);
    CHECK(snap.tree().size(snap.final_root()) == 0);
}

TEST_CASE("death at t frees the slot for a birth at t") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 1\n1 2\n"));
    CHECK(snap.alive_count(1) == 0);
}

TEST_CASE("equal birth times follow index order") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 2\n0 3\n"));
    CHECK(snap.alive_count(0) == 0);
    CHECK(snap.alive_count(1) == 1);
    CHECK(snap.death_at_rank(1, 1) == 2.0);
}

TEST_CASE("duplicate deaths keep multiplicity") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 5\n1 5\n2 6\n"));
    REQUIRE(snap.alive_count(2) == 2);
    CHECK(snap.death_at_rank(2, 1) == 5.0);
    CHECK(snap.death_at_rank(2, 2) == 5.0);
    CHECK(snap.bar_at_rank(2, 1) == 0);
    CHECK(snap.bar_at_rank(2, 2) == 1);
}

TEST_CASE("rank queries outside [1, c_r] are errors") {
    SweepSnapshots snap = run_sweep(parse_barcode("0 3\n1 4\n"));
    AliveDeaths view = alive_deaths(snap, 0);
    CHECK(view.size() == 0);
    CHECK_THROWS_AS(view[1], std::out_of_range);
    CHECK_THROWS_AS(snap.death_at_rank(1, 2), std::out_of_range);
    CHECK_THROWS_AS(snap.death_at_rank(5, 1), std::out_of_range);
}

TEST_CASE("snapshots match a naive quadratic sweep") {
    std::mt19937_64 eng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Barcode bc = testing::random_barcode(eng, trial % 3 == 0 ? 200 : 40);
        SweepSnapshots snap = run_sweep(bc);
        REQUIRE(snap.bar_count() == bc.size());
        for (index_t r = 0; r < bc.size(); ++r) {
            std::vector<Bar> alive = testing::naive_alive_set(bc, r);
            REQUIRE(snap.alive_count(r) == static_cast<std::int32_t>(alive.size()));
            for (std::size_t j = 0; j < alive.size(); ++j) {
                REQUIRE(snap.death_at_rank(r, static_cast<std::int32_t>(j) + 1) ==
                        alive[j].death);
                REQUIRE(snap.bar_at_rank(r, static_cast<std::int32_t>(j) + 1) ==
                        alive[j].index);
            }
        }
        CHECK(snap.tree().size(snap.final_root()) == 0);
    }
}

TEST_CASE("snapshots stay valid after the sweep finishes") {
    std::mt19937_64 eng(3);
    Barcode bc = testing::random_barcode(eng, 80);
    SweepSnapshots snap = run_sweep(bc);
    std::vector<std::vector<value_t>> first;
    for (index_t r = 0; r < bc.size(); ++r) {
        std::vector<value_t> deaths;
        for (std::int32_t j = 1; j <= snap.alive_count(r); ++j)
            deaths.push_back(snap.death_at_rank(r, j));
        first.push_back(std::move(deaths));
    }
    for (index_t r = 0; r < bc.size(); ++r)
        for (std::int32_t j = 1; j <= snap.alive_count(r); ++j)
            CHECK(snap.death_at_rank(r, j) == first[static_cast<std::size_t>(r)]
                                                   [static_cast<std::size_t>(j) - 1]);
}

TEST_CASE("node allocation after a full sweep is O(M log M)") {
    std::mt19937_64 eng(8);
    Barcode bc = testing::random_barcode(eng, 300);
    SweepSnapshots snap = run_sweep(bc);
    double m = std::max<double>(1, bc.size());
    double levels = std::ceil(std::log2(static_cast<double>(snap.tree().axis().n()) + 1));
    CHECK(static_cast<double>(snap.tree().node_count()) <= 4.0 * m * (levels + 1) + 1);
}

TEST_CASE("empty barcode sweeps to nothing") {
    SweepSnapshots snap = run_sweep(Barcode{});
    CHECK(snap.bar_count() == 0);
    CHECK(snap.tree().size(snap.final_root()) == 0);
}

TEST_SUITE_END();
