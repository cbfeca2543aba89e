#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trasdim/json_io.hpp"
#include "trasdim/solver.hpp"
#include "trasdim/suites.hpp"
#include "trasdim/util.hpp"

using namespace trasdim;

namespace {

std::shared_ptr<const Window> line(Coord lo, Coord hi) {
    std::vector<Point> pts;
    for (Coord x = lo; x <= hi; ++x) pts.push_back({1, {x}});
    return Window::from_points(Metric::sup, std::move(pts));
}

} // namespace

TEST_CASE("worked examples on the ten-point line") {
    auto w = line(0, 9);
    CHECK(decide_cover({w, {3}, 9}).verdict == Verdict::sat);
    CHECK(decide_cover({w, {3}, 2}).verdict == Verdict::unsat);
    CHECK(brute_force_decide({w, {3}, 2}).verdict == Verdict::unsat);

    SolverOptions canon;
    canon.canonical = true;
    Certificate cert = decide_cover({w, {3, 3}, 1}, canon);
    REQUIRE(cert.verdict == Verdict::sat);
    REQUIRE(cert.witness.has_value());
    REQUIRE(cert.witness->entries.size() == 2);
    std::vector<Block> fam0{{0, 1}, {4, 5}, {8, 9}};
    std::vector<Block> fam1{{2, 3}, {6, 7}};
    CHECK(cert.witness->entries[0].family.blocks == fam0);
    CHECK(cert.witness->entries[1].family.blocks == fam1);
}

TEST_CASE("instance validation") {
    auto w = line(0, 9);
    CHECK_THROWS_AS(decide_cover({w, {}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(decide_cover({w, {0}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_decide({w, {}, 3}), std::invalid_argument);
    auto big = line(-15, 15); // 2^31 colorings with two families
    CHECK_THROWS_AS(brute_force_decide({big, {2, 2}, 3}), std::invalid_argument);
    auto single = Window::from_points(Metric::sup, {{1, {0}}});
    CHECK(decide_cover({single, {5}, 0}).verdict == Verdict::sat);
}

TEST_CASE("min diameter worked examples") {
    auto w = line(0, 9);
    CHECK(min_diameter(w, {2, 2}).value == 0);
    CHECK(min_diameter(w, {3, 3}).value == 1);
    CHECK(min_diameter(w, {3}).value == 9);
}

TEST_CASE("greedy upper bound is validated or absent") {
    auto w = line(0, 9);
    auto cover = greedy_upper({w, {3, 3}, 1});
    REQUIRE(cover.has_value());
    CHECK(validate_cover(*cover, 1).accepted());
    // below the minimum diameter nothing valid exists to find
    CHECK_FALSE(greedy_upper({w, {3, 3}, 0}).has_value());
    auto single = Window::from_points(Metric::sup, {{1, {0}}});
    auto sc = greedy_upper({single, {4}, 0});
    REQUIRE(sc.has_value());
    CHECK(sc->entries[0].family.blocks.size() == 1);
}

TEST_CASE("solver oracle suite passes") {
    SolverOptions opts;
    SuiteReport rep = run_solver_oracle_suite(40, 19, opts);
    CHECK(rep.all_pass());
}

TEST_CASE("monotone in the diameter bound, anti-monotone in radii") {
    Rng rng(41);
    SolverOptions opts;
    for (int t = 0; t < 40; ++t) {
        int dims = int(rng.range(1, 2));
        Coord side = Coord(dims == 1 ? rng.range(3, 6) : rng.range(1, 2));
        auto w = Window::make({SpaceFamily::zn, dims, 1, side, 1});
        std::vector<Dist> radii;
        int m = int(rng.range(1, 2));
        for (int i = 0; i < m; ++i) radii.push_back(rng.range(1, 4));
        Dist D = rng.range(0, w->diameter());
        Verdict v = decide_cover({w, radii, D}, opts).verdict;
        if (v == Verdict::sat) {
            CHECK(decide_cover({w, radii, D + 1}, opts).verdict == Verdict::sat);
            CHECK(decide_cover({w, radii, D + 3}, opts).verdict == Verdict::sat);
            std::vector<Dist> smaller = radii;
            std::size_t pick = std::size_t(rng.range(0, std::int64_t(m) - 1));
            if (smaller[pick] > 1) {
                smaller[pick]--;
                CHECK(decide_cover({w, smaller, D}, opts).verdict == Verdict::sat);
            }
        }
    }
}

TEST_CASE("sat witnesses restrict to sub-windows") {
    SolverOptions opts;
    SuiteReport rep = run_restriction_suite(25, 43, opts);
    CHECK(rep.all_pass());
}

TEST_CASE("unsat certificates report work done") {
    auto w = line(0, 9);
    Certificate cert = decide_cover({w, {3}, 2});
    CHECK(cert.verdict == Verdict::unsat);
    CHECK(cert.stats.nodes > 0);
}

TEST_CASE("budget exhaustion yields unknown, never unsat") {
    SolverOptions opts;
    opts.node_budget = 10'000;
    opts.presolve = false;
    opts.canonical = true;
    auto w = Window::make({SpaceFamily::zn, 2, 1, 5, 1});
    Certificate cert = decide_cover({w, {2, 2}, 5}, opts);
    CHECK(cert.verdict == Verdict::unknown);
    CHECK(cert.stats.nodes >= 10'000);
}

TEST_CASE("canonical mode is deterministic byte for byte") {
    SolverOptions opts;
    opts.canonical = true;
    auto w = Window::make({SpaceFamily::zn, 1, 1, 9, 1});
    DecisionInstance inst{w, {3, 3}, 1};
    Certificate a = decide_cover(inst, opts);
    Certificate b = decide_cover(inst, opts);
    CHECK(certificate_to_json(a, inst).dump() == certificate_to_json(b, inst).dump());
}

TEST_CASE("presolve settles instances through sub-windows") {
    // unsat at the core scale certifies the larger window
    SolverOptions with;
    SolverOptions without;
    without.presolve = false;
    auto w = Window::make({SpaceFamily::zn, 2, 1, 4, 1});
    Certificate fast = decide_cover({w, {2, 2}, 2}, with);
    CHECK(fast.verdict == Verdict::unsat);
    CHECK(fast.decided_by == "presolve");
    Certificate direct = decide_cover({w, {2, 2}, 2}, without);
    CHECK(direct.verdict == Verdict::unsat);
}
