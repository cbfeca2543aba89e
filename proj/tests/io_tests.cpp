#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "trasdim/cache.hpp"
#include "trasdim/json_io.hpp"
#include "trasdim/util.hpp"

using namespace trasdim;

namespace {

std::filesystem::path temp_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() /
               (std::string("trasdim_test_") + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("window json round trip") {
    WindowSpec spec{SpaceFamily::lomega, 1, 1, 6, 3};
    auto w = Window::make(spec);
    Json j = window_to_json(*w);
    CHECK(j["family"] == "lomega");
    CHECK(j["side"] == 6);
    CHECK(j["level_cap"] == 3);
    auto back = window_from_json(j);
    CHECK(back->size() == w->size());
    CHECK(*back->spec() == spec);

    std::vector<Point> pts{{1, {0}}, {1, {3}}, {2, {0, 2}}};
    auto fp = Window::from_points(Metric::dinf, pts);
    Json j2 = window_to_json(*fp);
    CHECK(j2.contains("points"));
    auto back2 = window_from_json(j2);
    REQUIRE(back2->size() == 3);
    for (PointIndex i = 0; i < 3; ++i) CHECK(back2->point(i) == fp->point(i));
}

TEST_CASE("cover json round trip is byte exact") {
    auto w = Window::make({SpaceFamily::zn, 1, 1, 5, 1});
    DecisionInstance inst{w, {3, 3}, 1};
    Certificate cert = decide_cover(inst);
    REQUIRE(cert.verdict == Verdict::sat);
    Json j = cover_to_json(*cert.witness);
    ColoredCover back = cover_from_json(j);
    CHECK(cover_to_json(back).dump() == j.dump());

    // tower covers serialize points as level/coords objects
    auto lw = Window::make({SpaceFamily::lomega, 1, 1, 4, 2});
    ColoredCover lcover;
    lcover.window = lw;
    lcover.entries.push_back({1, Family{{{0}, {1, 2}}}});
    Block rest;
    for (PointIndex i = 3; i < lw->size(); ++i) rest.push_back(i);
    lcover.entries.push_back({1, Family{{rest}}});
    canonicalize(lcover);
    Json lj = cover_to_json(lcover);
    CHECK(lj["entries"][0]["blocks"][0][0].contains("level"));
    ColoredCover lback = cover_from_json(lj);
    CHECK(cover_to_json(lback).dump() == lj.dump());
}

TEST_CASE("alien points in cover json are reported") {
    auto w = Window::make({SpaceFamily::zn, 1, 1, 3, 1});
    Json j;
    j["window"] = window_to_json(*w);
    j["entries"] = Json::array();
    j["entries"].push_back({{"radius", 2}, {"blocks", Json::array()}});
    j["entries"][0]["blocks"].push_back(Json::array());
    j["entries"][0]["blocks"][0].push_back(Json::array({42}));
    CHECK_THROWS_WITH_AS(cover_from_json(j), doctest::Contains("outside the window"),
                         std::invalid_argument);
}

TEST_CASE("instance hashes are stable and content sensitive") {
    auto w = Window::make({SpaceFamily::zn, 2, 1, 3, 1});
    DecisionInstance a{w, {2, 2}, 3};
    DecisionInstance b{w, {2, 2}, 3};
    DecisionInstance c{w, {2, 3}, 3};
    CHECK(instance_hash(a) == instance_hash(b));
    CHECK(instance_hash(a) != instance_hash(c));
}

TEST_CASE("system json follows the wire format") {
    ExplicitSystem m({1, 2, 3}, {{1}, {1, 2}});
    Json j = system_to_json(m);
    CHECK(j.dump() == R"({"members":[[1],[1,2]],"universe":[1,2,3]})");
    ExplicitSystem back = system_from_json(j);
    CHECK(back.members() == m.members());
    CHECK(back.universe() == m.universe());
}

TEST_CASE("result cache stores and replays verdicts") {
    auto dir = temp_dir("cache");
    auto file = dir / "results.jsonl";
    {
        ResultCache cache(file);
        SolverOptions opts;
        opts.cache = &cache;
        auto w = Window::make({SpaceFamily::zn, 1, 1, 9, 1});
        DecisionInstance inst{w, {3}, 2};
        Certificate first = decide_cover(inst, opts);
        CHECK(first.verdict == Verdict::unsat);
        CHECK(first.decided_by != "cache");
        Certificate second = decide_cover(inst, opts);
        CHECK(second.verdict == Verdict::unsat);
        CHECK(second.decided_by == "cache");
        CHECK(second.stats.nodes == first.stats.nodes);
    }
    {
        // fresh process image: reload from disk
        ResultCache cache(file);
        CHECK(cache.size() >= 1);
        SolverOptions opts;
        opts.cache = &cache;
        auto w = Window::make({SpaceFamily::zn, 1, 1, 9, 1});
        Certificate hit = decide_cover({w, {3}, 2}, opts);
        CHECK(hit.decided_by == "cache");
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("cached sat witnesses still validate") {
    auto dir = temp_dir("cache_sat");
    ResultCache cache(dir / "results.jsonl");
    SolverOptions opts;
    opts.cache = &cache;
    auto w = Window::make({SpaceFamily::zn, 1, 1, 9, 1});
    DecisionInstance inst{w, {3, 3}, 1};
    Certificate first = decide_cover(inst, opts);
    REQUIRE(first.verdict == Verdict::sat);
    Certificate second = decide_cover(inst, opts);
    CHECK(second.decided_by == "cache");
    REQUIRE(second.witness.has_value());
    CHECK(validate_cover(*second.witness, 1).accepted());
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt cache tails are truncated with a warning") {
    auto dir = temp_dir("cache_corrupt");
    auto file = dir / "results.jsonl";
    {
        ResultCache cache(file);
        SolverOptions opts;
        opts.cache = &cache;
        auto w = Window::make({SpaceFamily::zn, 1, 1, 5, 1});
        decide_cover({w, {2}, 1}, opts);
        decide_cover({w, {2}, 2}, opts);
    }
    auto good_size = std::filesystem::file_size(file);
    {
        std::ofstream out(file, std::ios::binary | std::ios::app);
        out << "{\"hash\": \"torn";
    }
    {
        ResultCache cache(file);
        CHECK(cache.size() == 2);
    }
    CHECK(std::filesystem::file_size(file) == good_size);
    std::filesystem::remove_all(dir);
}

TEST_CASE("unknown verdicts are not reused across budgets") {
    auto dir = temp_dir("cache_unknown");
    ResultCache cache(dir / "results.jsonl");
    auto w = Window::make({SpaceFamily::zn, 2, 1, 5, 1});
    DecisionInstance inst{w, {2, 2}, 5};
    SolverOptions small;
    small.cache = &cache;
    small.node_budget = 10'000;
    small.presolve = false;
    small.canonical = true;
    Certificate a = decide_cover(inst, small);
    CHECK(a.verdict == Verdict::unknown);
    SolverOptions bigger = small;
    bigger.node_budget = 40'000;
    Certificate b = decide_cover(inst, bigger);
    CHECK(b.decided_by != "cache"); // different budget must recompute
    std::filesystem::remove_all(dir);
}
