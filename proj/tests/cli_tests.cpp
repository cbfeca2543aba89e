#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "trasdim/json_io.hpp"

using namespace trasdim;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path work_dir() {
    static auto dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("trasdim_cli_" + std::to_string(::getpid()));
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string cli_path() {
    const char* env = std::getenv("TRASDIM_CLI");
    REQUIRE_MESSAGE(env != nullptr, "TRASDIM_CLI must point at the built binary");
    return env;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    auto out_file = work_dir() / ("out" + std::to_string(counter) + ".txt");
    auto err_file = work_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = cli_path() + " " + args + " >" + out_file.string() + " 2>" +
                      err_file.string();
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_file);
    res.err = slurp(err_file);
    return res;
}

} // namespace

TEST_CASE("decide: sat instance exits 0 with a validating witness") {
    RunResult r = run("decide --space zn --dims 1 --side 9 --radii 3,3 --diam 1 --canonical");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "sat");
    ColoredCover witness = cover_from_json(j["witness"]);
    CHECK(validate_cover(witness, 1).accepted());

    // canonical runs are byte identical
    RunResult again = run("decide --space zn --dims 1 --side 9 --radii 3,3 --diam 1 --canonical");
    CHECK(again.out == r.out);
}

TEST_CASE("decide: unsat instance exits 1") {
    RunResult r = run("decide --space zn --dims 1 --side 5 --radii 3 --diam 2");
    CHECK(r.exit_code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "unsat");
    CHECK(j["stats"]["nodes"].get<std::uint64_t>() > 0);
}

TEST_CASE("decide: desk-scale plane instance exits 1") {
    RunResult r = run("decide --space zn --dims 2 --side 3 --radii 2,2 --diam 3");
    CHECK(r.exit_code == 1);
}

TEST_CASE("decide: budget exhaustion exits 2") {
    RunResult r = run("decide --space zn --dims 2 --side 5 --radii 2,2 --diam 5 "
                      "--budget 10000 --no-presolve --canonical");
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "unknown");
}

TEST_CASE("usage errors exit 64") {
    CHECK(run("decide --space zn --dims 1 --side 9 --diam 1").exit_code == 64); // no radii
    CHECK(run("decide --space zn --dims 1 --side 9 --radii 3 --diam 1 --budget 100").exit_code ==
          64);
    CHECK(run("verify --suite bogus").exit_code == 64);
    CHECK(run("scan --space zn --dims 1 --radii 3 --sides 5..4").exit_code == 64);
    CHECK(run("nonsense").exit_code == 64);
}

TEST_CASE("scan: line window minimum diameters grow with the side") {
    auto csv = work_dir() / "scan.csv";
    RunResult r = run("scan --space zn --dims 1 --radii 3 --sides 2..4 --out " + csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "side,radii,min_diameter,nodes");
    std::vector<Dist> values;
    while (std::getline(in, row)) {
        std::size_t pos = 0;
        for (int i = 0; i < 2; ++i) pos = row.find(',', pos) + 1;
        values.push_back(std::stol(row.substr(pos)));
    }
    // one family on the line needs the whole window in one block
    REQUIRE(values.size() == 3);
    CHECK(values[0] == 4);
    CHECK(values[1] == 6);
    CHECK(values[2] == 8);
}

TEST_CASE("scan: plane window minimum diameter strictly grows") {
    auto csv = work_dir() / "scan2.csv";
    RunResult r =
        run("scan --space zn --dims 2 --radii 2,2 --sides 1..3 --jobs 2 --out " + csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::vector<long> values;
    while (std::getline(in, row)) {
        std::size_t pos = 0;
        for (int i = 0; i < 2; ++i) pos = row.find(',', pos) + 1;
        values.push_back(std::stol(row.substr(pos)));
    }
    REQUIRE(values.size() == 3);
    CHECK(values[0] < values[1]);
    CHECK(values[1] < values[2]);
}

TEST_CASE("scan: tower rows stay within the constructive bound") {
    // the 2-family constructive cover of the tower window has diameter 7
    auto csv = work_dir() / "scan3.csv";
    RunResult r = run("scan --space lomega --level-cap 2 --radii 3,1 --sides 6..10 --out " +
                      csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    std::string header, row;
    std::getline(in, header);
    int rows = 0;
    while (std::getline(in, row)) {
        std::size_t pos = 0;
        for (int i = 0; i < 2; ++i) pos = row.find(',', pos) + 1;
        long v = std::stol(row.substr(pos));
        CHECK(v <= 7);
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("verify: suites run and report") {
    RunResult r = run("verify --suite lemmaD --trials 50 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite lemmaD: PASS") != std::string::npos);
    CHECK(r.out.find("(50/50)") != std::string::npos);

    RunResult m = run("verify --suite metric --trials 2000 --seed 7");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("suite metric: PASS") != std::string::npos);
}

TEST_CASE("build: constructive covers export and validate") {
    auto out = work_dir() / "cover.json";
    RunResult r = run("build --type zn --space zn --dims 2 --side 20 --r 3 --out " + out.string());
    CHECK(r.exit_code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["accepted"] == true);
    ColoredCover cover = cover_from_json(j["cover"]);
    CHECK(cover.entries.size() == 3);
    CHECK(validate_cover(cover, j["achieved_diameter"].get<Dist>()).accepted());

    RunResult l = run("build --type lomega --space lomega --level-cap 2 --side 20 --tau 3 --out " +
                      out.string());
    CHECK(l.exit_code == 0);
    Json lj = Json::parse(slurp(out));
    CHECK(lj["accepted"] == true);
}

TEST_CASE("ord: bounded window case and the line at scale") {
    RunResult r = run("ord --space zn --dims 1 --side 4 --diam 8 --r-max 2");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["ordinal"] == "0");
    CHECK(j["exact"] == true);
    CHECK(j["paths_agree"] == true);
    CHECK(j["window_trasdim"] == "-1");

    RunResult line = run("ord --space zn --dims 1 --side 4 --diam 1 --r-max 2");
    CHECK(line.exit_code == 0);
    Json lj = Json::parse(line.out);
    CHECK(lj["ordinal"] == "1");
}

TEST_CASE("cache directory is honored and survives corruption") {
    auto dir = work_dir() / "cache";
    std::string base = "decide --space zn --dims 1 --side 7 --radii 2 --diam 2 --cache-dir " +
                       dir.string();
    RunResult first = run(base);
    CHECK(first.exit_code == 1);
    RunResult second = run(base);
    CHECK(second.exit_code == 1);
    Json j = Json::parse(second.out);
    CHECK(j["decided_by"] == "cache");
    {
        std::ofstream app(dir / "results.jsonl", std::ios::binary | std::ios::app);
        app << "not json";
    }
    RunResult third = run(base);
    CHECK(third.exit_code == 1);
    CHECK(third.err.find("truncating corrupt tail") != std::string::npos);
}

TEST_CASE("window export writes points and matrix") {
    auto pts = work_dir() / "pts.csv";
    auto mat = work_dir() / "mat.csv";
    RunResult r = run("window --space lomega --level-cap 2 --side 2 --points-csv " + pts.string() +
                      " --matrix-csv " + mat.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(pts);
    std::string line;
    int rows = -1; // header
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 14);
}
