#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trasdim/spaces.hpp"
#include "trasdim/suites.hpp"
#include "trasdim/util.hpp"

using namespace trasdim;

namespace {

Point lat(std::vector<Coord> coords) {
    Point p;
    p.level = std::int32_t(coords.size());
    p.coords = std::move(coords);
    return p;
}

} // namespace

TEST_CASE("sup metric worked examples") {
    CHECK(sup_dist(std::vector<Coord>{0, 0}, std::vector<Coord>{0, 0}) == 0);
    CHECK(sup_dist(std::vector<Coord>{3, 4}, std::vector<Coord>{5, 1}) == 3);
    CHECK(sup_dist(std::vector<Coord>{-2, 7, 0}, std::vector<Coord>{4, 7, -1}) == 6);
    CHECK_THROWS_AS(sup_dist(std::vector<Coord>{1}, std::vector<Coord>{1, 2}),
                    std::invalid_argument);
}

TEST_CASE("tower metric worked examples") {
    CHECK(tower_dist(lat({3, 4}), lat({5, 1})) == 3);
    CHECK(tower_dist(lat({0}), lat({0, 0, 0})) == 3); // padded 0, c = 1+2
    CHECK(tower_dist(lat({6}), lat({1, 7, 0})) == 7); // a'=(6,0,0): sup 7, c 3
    CHECK(level_gap(1, 3) == 3);
    CHECK(level_gap(2, 2) == 0);
    CHECK(level_gap(2, 5) == 2 + 3 + 4);
}

TEST_CASE("window enumeration worked examples") {
    auto z1 = Window::make({SpaceFamily::zn, 1, 1, 2, 1});
    CHECK(z1->size() == 5);
    CHECK(z1->point(0).coords == std::vector<Coord>{-2});
    CHECK(z1->point(4).coords == std::vector<Coord>{2});

    auto kz = Window::make({SpaceFamily::kzn, 2, 2, 2, 1});
    CHECK(kz->size() == 9);
    for (PointIndex i = 0; i < kz->size(); ++i)
        for (Coord c : kz->point(i).coords) CHECK(c % 2 == 0);

    auto lo = Window::make({SpaceFamily::lomega, 1, 1, 2, 2});
    CHECK(lo->size() == 14); // 5 level-1 points plus {-2,0,2}^2

    CHECK_THROWS_AS(Window::make({SpaceFamily::zn, 1, 1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Window::make({SpaceFamily::lomega, 1, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("window determinism and canonical order") {
    WindowSpec spec{SpaceFamily::lomega, 1, 1, 4, 3};
    auto a = Window::make(spec);
    auto b = Window::make(spec);
    REQUIRE(a->size() == b->size());
    for (PointIndex i = 0; i < a->size(); ++i) {
        CHECK(a->point(i) == b->point(i));
        if (i + 1 < a->size()) CHECK(a->point(i) < a->point(i + 1));
    }
    // index_of inverts point()
    for (PointIndex i = 0; i < a->size(); ++i) {
        auto idx = a->index_of(a->point(i));
        REQUIRE(idx.has_value());
        CHECK(*idx == i);
    }
    CHECK_FALSE(a->index_of(lat({99})).has_value());
}

TEST_CASE("neighborhood examples and monotonicity") {
    auto z1 = Window::make({SpaceFamily::zn, 1, 1, 2, 1});
    PointIndex zero = *z1->index_of(lat({0}));
    std::vector<PointIndex> a{zero};
    auto n0 = neighborhood(a, 0, *z1);
    CHECK(n0 == std::vector<PointIndex>{zero});
    auto n1 = neighborhood(a, 1, *z1);
    CHECK(n1.size() == 3);

    auto lo = Window::make({SpaceFamily::lomega, 1, 1, 2, 2});
    Point lvl1_zero = lat({0});
    Point lvl2_zero = lat({0, 0});
    std::vector<PointIndex> b{*lo->index_of(lvl1_zero)};
    auto n3 = neighborhood(b, 3, *lo);
    bool contains = false;
    for (PointIndex i : n3)
        if (lo->point(i) == lvl2_zero) contains = true;
    CHECK(contains);

    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Dist r1 = rng.range(0, 3), r2 = r1 + rng.range(0, 3);
        auto small = neighborhood(b, r1, *lo);
        auto large = neighborhood(b, r2, *lo);
        for (PointIndex p : small)
            CHECK(std::find(large.begin(), large.end(), p) != large.end());
    }
}

TEST_CASE("set metrics worked examples") {
    std::vector<Point> pts;
    for (Coord x = 0; x <= 5; ++x) pts.push_back(lat({x}));
    auto w = Window::from_points(Metric::sup, pts);
    auto idx = [&](Coord x) { return *w->index_of(lat({x})); };
    std::vector<PointIndex> a{idx(0), idx(1)}, b{idx(4), idx(5)};
    SetMetrics m = set_metrics(a, b, *w);
    CHECK(m.distance == 3);
    std::vector<PointIndex> c{idx(0), idx(1), idx(2)};
    CHECK(set_metrics(c, c, *w).diam_a == 2);
    std::vector<PointIndex> s{idx(3)};
    SetMetrics sm = set_metrics(s, s, *w);
    CHECK(sm.distance == 0);
    CHECK(sm.diam_a == 0);
    CHECK_THROWS_AS(set_metrics({}, a, *w), std::invalid_argument);
}

TEST_CASE("metric suite passes") {
    SuiteReport rep = run_metric_suite(2000, 7);
    CHECK(rep.all_pass());
}

TEST_CASE("window distance agrees with tower_dist and box diameter is exact") {
    auto lo = Window::make({SpaceFamily::lomega, 1, 1, 6, 3});
    Rng rng(9);
    for (int t = 0; t < 2000; ++t) {
        PointIndex i = PointIndex(rng.range(0, std::int64_t(lo->size()) - 1));
        PointIndex j = PointIndex(rng.range(0, std::int64_t(lo->size()) - 1));
        CHECK(lo->distance(i, j) == tower_dist(lo->point(i), lo->point(j)));
    }
    // box diameter equals brute-force pairwise max on random subsets
    for (int t = 0; t < 50; ++t) {
        std::vector<PointIndex> pick;
        for (PointIndex i = 0; i < lo->size(); ++i)
            if (rng.chance(20)) pick.push_back(i);
        if (pick.empty()) pick.push_back(0);
        BoxAgg box;
        Dist direct = 0;
        for (PointIndex p : pick) box.add(*lo, p);
        for (std::size_t x = 0; x < pick.size(); ++x)
            for (std::size_t y = x + 1; y < pick.size(); ++y)
                direct = std::max(direct, lo->distance(pick[x], pick[y]));
        CHECK(box.diameter(lo->pad_dims()) == direct);
    }
}
