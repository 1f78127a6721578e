#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "wedge/bench.hpp"
#include "wedge/decomposition.hpp"
#include "wedge/generator.hpp"
#include "wedge/serialization.hpp"
#include "wedge/stability.hpp"
#include "wedge/topk.hpp"

namespace {

using namespace wedge;

Barcode load_barcode(const std::string& path, std::optional<value_t> t_max) {
    if (path == "-") return parse_barcode(std::cin, t_max);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_barcode(in, t_max);
}

std::optional<value_t> tmax_option(double t_max, bool set) {
    return set ? std::optional<value_t>(t_max) : std::nullopt;
}

// Anchor per output position, expanded from grouped/enum emissions.
std::vector<index_t> anchors_per_position(const TopKResult& res) {
    std::vector<index_t> anchors;
    anchors.reserve(res.lengths.size());
    for (const Emission& e : res.emissions)
        anchors.insert(anchors.end(), e.copies, e.anchor);
    return anchors;
}

int cmd_topk(const std::string& path, int order, std::int64_t k, const std::string& mode,
             bool intervals, bool identities, double t_max, bool t_max_set, bool as_json) {
    Barcode bc = load_barcode(path, tmax_option(t_max, t_max_set));
    SweepSnapshots snap = run_sweep(std::move(bc));

    TopKResult res;
    if (mode == "grouped") {
        res = topk_grouped(snap, order, k);
        if (identities) res.identities = expand_identities(snap, order, res.emissions);
    } else if (mode == "colex") {
        res = topk_colex(snap, order, k, identities);
    } else if (mode == "enum") {
        if (identities)
            throw std::runtime_error("--identities requires --mode grouped or colex");
        res = topk_enum(snap, order, k);
    } else {
        throw std::runtime_error("unknown mode '" + mode + "'");
    }

    std::vector<index_t> anchors;
    if (intervals || as_json) anchors = anchors_per_position(res);

    if (as_json) {
        nlohmann::json j{{"i", order}, {"k", k}, {"mode", mode}, {"lengths", res.lengths}};
        if (intervals) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t p = 0; p < res.lengths.size(); ++p) {
                value_t b = snap.input().bars[static_cast<std::size_t>(anchors[p])].birth;
                arr.push_back({b, b + res.lengths[p]});
            }
            j["intervals"] = arr;
        }
        if (res.identities) j["identities"] = *res.identities;
        std::cout << j.dump() << '\n';
        return 0;
    }

    for (std::size_t p = 0; p < res.lengths.size(); ++p) {
        std::cout << format_value(res.lengths[p]);
        if (intervals) {
            value_t b = snap.input().bars[static_cast<std::size_t>(anchors[p])].birth;
            std::cout << ' ' << format_value(b) << ' ' << format_value(b + res.lengths[p]);
        }
        if (res.identities)
            for (index_t idx : (*res.identities)[p]) std::cout << ' ' << idx;
        std::cout << '\n';
    }
    return 0;
}

int cmd_enum(const std::string& path, int order, double t_max, bool t_max_set, bool as_json) {
    Barcode bc = load_barcode(path, tmax_option(t_max, t_max_set));
    SweepSnapshots snap = run_sweep(std::move(bc));
    std::vector<DecompositionItem> items = enumerate_decomposition(snap, order);
    std::sort(items.begin(), items.end(),
              [](const DecompositionItem& a, const DecompositionItem& b) {
                  if (a.length != b.length) return a.length > b.length;
                  if (a.anchor != b.anchor) return a.anchor < b.anchor;
                  return a.rank < b.rank;
              });
    std::uint64_t total = decomposition_total(snap, order);

    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const DecompositionItem& it : items)
            arr.push_back({{"length", it.length},
                           {"anchor", it.anchor},
                           {"rank", it.rank},
                           {"weight", it.weight}});
        std::cout << nlohmann::json{{"i", order}, {"total", total}, {"items", arr}}.dump()
                  << '\n';
        return 0;
    }
    for (const DecompositionItem& it : items)
        std::cout << format_value(it.length) << ' ' << it.anchor << ' ' << it.rank << ' '
                  << it.weight << '\n';
    std::cerr << "total " << total << " intervals in " << items.size() << " groups\n";
    return 0;
}

int cmd_gen(std::int64_t m, double l_mean, std::uint64_t seed, const std::string& out_path) {
    Barcode bc = generate(GenConfig{m, l_mean, seed});
    std::ostringstream header;
    header << "# wedge gen m=" << m << " lmean=" << format_value(l_mean) << " seed=" << seed
           << '\n';
    if (out_path.empty() || out_path == "-") {
        std::cout << header.str();
        serialize_barcode(bc, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << header.str();
        serialize_barcode(bc, out);
    }
    return 0;
}

int cmd_verify(const std::string& path, int trials, std::int64_t m, int order, double l_mean,
               std::uint64_t seed, double t_max, bool t_max_set) {
    int passed = 0, total = 0;
    auto run_trial = [&](const Barcode& bc, const std::string& label) {
        ++total;
        std::vector<Interval> oracle = brute_force_lambda(bc, order);
        std::vector<value_t> expected;
        expected.reserve(oracle.size());
        for (const Interval& iv : oracle) expected.push_back(iv.length());
        std::sort(expected.begin(), expected.end(), std::greater<>());

        SweepSnapshots snap = run_sweep(bc);
        std::int64_t k = static_cast<std::int64_t>(expected.size()) + 1;
        TopKResult grouped = topk_grouped(snap, order, k);
        TopKResult colex = topk_colex(snap, order, k);
        TopKResult enumd = topk_enum(snap, order, k);

        bool ok = grouped.lengths == expected && colex.lengths == expected &&
                  enumd.lengths == expected;
        // identities must realize their recorded lengths
        std::vector<std::vector<index_t>> tuples =
            expand_identities(snap, order, grouped.emissions);
        ok = ok && tuples.size() == grouped.lengths.size();
        for (std::size_t p = 0; ok && p < tuples.size(); ++p) {
            value_t max_b = -std::numeric_limits<value_t>::infinity();
            value_t min_d = std::numeric_limits<value_t>::infinity();
            for (index_t idx : tuples[p]) {
                max_b = std::max(max_b, bc.bars[static_cast<std::size_t>(idx)].birth);
                min_d = std::min(min_d, bc.bars[static_cast<std::size_t>(idx)].death);
            }
            ok = (min_d - max_b) == grouped.lengths[p];
        }
        if (ok) ++passed;
        std::cout << label << (ok ? ": ok" : ": MISMATCH") << " (M=" << bc.size()
                  << ", total=" << expected.size() << ")\n";
    };

    if (!path.empty()) {
        run_trial(load_barcode(path, tmax_option(t_max, t_max_set)), path);
    } else {
        for (int t = 0; t < trials; ++t)
            run_trial(generate(GenConfig{m, l_mean, seed + static_cast<std::uint64_t>(t)}),
                      "trial " + std::to_string(t));
    }
    std::cout << passed << "/" << total << " passed\n";
    return passed == total ? 0 : 1;
}

int cmd_stability(int trials, std::int64_t m, int order, std::int64_t k, double epsilon,
                  std::uint64_t seed) {
    if (m > 100)
        throw GuardError("stability: m > 100 exceeds the exact-bottleneck guard");
    if (epsilon < 0) throw std::invalid_argument("stability: epsilon must be >= 0");

    bool all_hold = true;

    // tightness: shrinking one bar by eps on both ends moves the Top-1 length
    // by exactly twice the bottleneck distance
    Barcode tx, ty;
    tx.bars = {Bar{0, 0.0, 4.0}, Bar{1, 0.0, 4.0}};
    ty.bars = {Bar{0, 0.5, 3.5}, Bar{1, 0.5, 3.5}};
    StabilityCheck tight = check_topk_stability(tx, ty, 2, 1);
    bool tight_ok = tight.holds && std::abs(tight.lhs - tight.rhs) <= 1e-12;
    all_hold = all_hold && tight_ok;
    std::cout << "tightness: lhs=" << format_value(tight.lhs)
              << " rhs=" << format_value(tight.rhs) << (tight_ok ? " ok" : " FAIL") << '\n';

    std::mt19937_64 eng(seed);
    double len_lo = 2 * epsilon + 0.01;
    for (int t = 0; t < trials; ++t) {
        Barcode x, y;
        for (std::int64_t r = 0; r < m; ++r) {
            double b = detail::uniform01(eng);
            double len = len_lo + detail::uniform01(eng) * 0.5;
            x.bars.push_back(Bar{static_cast<index_t>(r), b, b + len});
            double db = (2 * detail::uniform01(eng) - 1) * epsilon;
            double dd = (2 * detail::uniform01(eng) - 1) * epsilon;
            y.bars.push_back(Bar{static_cast<index_t>(r), b + db, b + len + dd});
        }
        StabilityCheck chk = check_topk_stability(x, y, order, k);
        all_hold = all_hold && chk.holds;
        std::cout << "trial " << t << ": lhs=" << format_value(chk.lhs)
                  << " rhs=" << format_value(chk.rhs) << (chk.holds ? " ok" : " FAIL") << '\n';
    }
    std::cout << (all_hold ? "all hold\n" : "violations found\n");
    return all_hold ? 0 : 1;
}

int cmd_bench(std::int64_t m, double l_mean, int order, std::int64_t k, std::uint64_t seed,
              int reps, bool as_json) {
    BenchReport report = run_benchmark(BenchConfig{m, l_mean, order, k, seed, reps});
    nlohmann::json j = report;
    if (as_json) {
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "setting: m=" << m << " lmean=" << format_value(l_mean) << " i=" << order
              << " k=" << k << " seed=" << seed << " reps=" << reps << '\n'
              << "k_all:    " << report.k_all << '\n'
              << "baseline: " << format_value(report.t_baseline_s) << " s\n"
              << "ours:     " << format_value(report.t_ours_s) << " s\n"
              << "speedup:  " << format_value(report.speedup) << "x\n"
              << j.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Top-K longest intervals of exterior-power barcodes"};
    app.require_subcommand(1);

    std::string path = "-", mode = "grouped", out_path;
    int order = 2, trials = 100, reps = 3;
    std::int64_t k = 10, m = 20;
    double t_max = 0, l_mean = 0.05, epsilon = 0.01;
    std::uint64_t seed = 1;
    bool intervals = false, identities = false, as_json = false;

    auto* topk = app.add_subcommand("topk", "K longest exterior-power intervals");
    topk->add_option("input", path, "barcode file, '-' for stdin");
    topk->add_option("--i", order, "exterior power order (>= 2)")->check(CLI::Range(2, 64));
    topk->add_option("--k", k, "number of intervals")->check(CLI::NonNegativeNumber);
    topk->add_option("--mode", mode, "grouped | colex | enum");
    topk->add_flag("--intervals", intervals, "also print birth/death per interval");
    topk->add_flag("--identities", identities, "also print the i bar indices per interval");
    auto* topk_tmax = topk->add_option("--tmax", t_max, "truncation horizon for infinite bars");
    topk->add_flag("--json", as_json, "JSON output");

    auto* enm = app.add_subcommand("enum", "full anchored decomposition");
    enm->add_option("input", path, "barcode file, '-' for stdin");
    enm->add_option("--i", order, "exterior power order (>= 2)")->check(CLI::Range(2, 64));
    auto* enum_tmax = enm->add_option("--tmax", t_max, "truncation horizon for infinite bars");
    enm->add_flag("--json", as_json, "JSON output");

    auto* gen = app.add_subcommand("gen", "synthetic barcode");
    gen->add_option("--m", m, "number of bars")->check(CLI::NonNegativeNumber);
    gen->add_option("--lmean", l_mean, "mean bar length before truncation");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "engines vs brute force");
    std::string verify_path;
    verify->add_option("input", verify_path, "barcode file to check");
    verify->add_option("--random", trials, "number of random trials")
        ->check(CLI::PositiveNumber);
    verify->add_option("--m", m, "bars per random trial");
    verify->add_option("--i", order, "exterior power order")->check(CLI::Range(2, 64));
    verify->add_option("--lmean", l_mean, "mean bar length for random trials");
    verify->add_option("--seed", seed, "PRNG seed");
    auto* verify_tmax =
        verify->add_option("--tmax", t_max, "truncation horizon for infinite bars");

    auto* stab = app.add_subcommand("stability", "Top-K length-vector stability trials");
    stab->add_option("--trials", trials, "number of jitter trials");
    stab->add_option("--m", m, "bars per trial");
    stab->add_option("--i", order, "exterior power order")->check(CLI::Range(2, 64));
    stab->add_option("--k", k, "length vector size")->check(CLI::PositiveNumber);
    stab->add_option("--epsilon", epsilon, "endpoint jitter bound");
    stab->add_option("--seed", seed, "PRNG seed");

    auto* bench = app.add_subcommand("bench", "best-first vs enumeration baseline");
    bench->add_option("--m", m, "number of bars");
    bench->add_option("--lmean", l_mean, "mean bar length");
    bench->add_option("--i", order, "exterior power order")->check(CLI::Range(2, 64));
    bench->add_option("--k", k, "number of intervals");
    bench->add_option("--seed", seed, "PRNG seed");
    bench->add_option("--reps", reps, "repetitions, best run reported");
    bench->add_flag("--json", as_json, "JSON output only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (topk->parsed())
            return cmd_topk(path, order, k, mode, intervals, identities, t_max,
                            !topk_tmax->empty(), as_json);
        if (enm->parsed())
            return cmd_enum(path, order, t_max, !enum_tmax->empty(), as_json);
        if (gen->parsed()) return cmd_gen(m, l_mean, seed, out_path);
        if (verify->parsed())
            return cmd_verify(verify_path, trials, m, order, l_mean, seed, t_max,
                              !verify_tmax->empty());
        if (stab->parsed()) return cmd_stability(trials, m, order, k, epsilon, seed);
        if (bench->parsed())
            return cmd_bench(m, l_mean, order, k, seed, reps, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
