// Acceptance harness: runs every gate criterion and prints one PASS/FAIL
// line each. All checks are exact; the stated runtime limits are enforced.

#include <chrono>
#include <cstdio>
#include <string>

#include "trasdim/borst.hpp"
#include "trasdim/suites.hpp"

using namespace trasdim;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string label;
    double limit_seconds;
};

void report(const Criterion& c, bool pass, double seconds, const std::string& detail) {
    bool in_time = seconds <= c.limit_seconds;
    bool ok = pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.1fs/%.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.label.c_str(), seconds, c.limit_seconds, detail.empty() ? "" : " ",
                detail.c_str());
    std::fflush(stdout);
}

template <typename F>
void run(const Criterion& c, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(c, pass, seconds, detail);
}

std::string summarize(const SuiteReport& rep) {
    std::uint64_t passed = 0, total = 0;
    for (const CheckResult& c : rep.checks) {
        passed += c.passed;
        total += c.total;
    }
    return std::to_string(passed) + "/" + std::to_string(total);
}

} // namespace

int main() {
    SolverOptions opts; // defaults: fast mode, presolve, 1e8 node budget

    run({1, "metric soundness of the tower metric", 10}, [&](std::string& d) {
        SuiteReport rep = run_metric_suite(10'000, 7);
        d = summarize(rep);
        return rep.all_pass();
    });

    run({2, "ord recursion equals max member cardinality", 10}, [&](std::string& d) {
        SuiteReport rep = run_lemmaD_suite(200, 7);
        d = summarize(rep);
        return rep.all_pass();
    });

    run({3, "relabeling monotonicity and intermediate values", 30}, [&](std::string& d) {
        SuiteReport f = run_lemmaF_suite(100, 7);
        SuiteReport v = run_lemma5_suite(30, 7);
        d = summarize(f) + " relabelings, " + summarize(v) + " intermediate targets";
        return f.all_pass() && v.all_pass();
    });

    run({4, "solver agrees with the exhaustive oracle", 300}, [&](std::string& d) {
        SuiteReport rep = run_solver_oracle_suite(100, 7, opts);
        d = summarize(rep);
        return rep.all_pass();
    });

    run({5, "no two small-scale families cover plane windows", 600}, [&](std::string& d) {
        SuiteReport rep = run_lemma3_suite(1, 4, true, opts);
        d = summarize(rep);
        for (const CheckResult& c : rep.checks)
            if (!c.pass) d += " [" + c.name + " " + c.note + "]";
        return rep.all_pass();
    });

    run({6, "lattice covers: n+1 families, bounded blocks", 60}, [&](std::string& d) {
        SuiteReport rep = run_zn_cover_suite();
        d = summarize(rep);
        return rep.all_pass();
    });

    run({7, "neighborhood expansion trades radius for diameter", 60}, [&](std::string& d) {
        SuiteReport rep = run_lemma4_suite(100, 7, opts);
        d = summarize(rep);
        return rep.all_pass();
    });

    run({8, "tower windows admit the constructed covers", 300}, [&](std::string& d) {
        SuiteReport rep = run_thm2_suite(opts);
        d = summarize(rep);
        return rep.all_pass();
    });

    run({9, "plane obstruction persists where tower windows are coverable", 120},
        [&](std::string& d) {
            // the radius pair (2,3) stays uncoverable on the plane windows of
            // criterion 5 at every diameter bound up to 4, while criterion 8
            // builds covers for the matching tower windows
            auto w = Window::make({SpaceFamily::zn, 2, 1, 4, 1});
            Certificate big = decide_cover({w, {2, 3}, 4}, opts);
            bool plane_blocked = big.verdict == Verdict::unsat;
            // monotonicity in the diameter bound carries this down to D <= 4;
            // confirm the bottom case independently by exhaustive enumeration
            auto small = Window::make({SpaceFamily::zn, 2, 1, 2, 1});
            bool brute_blocked = brute_force_decide({small, {2, 3}, 2}).verdict == Verdict::unsat;
            auto tower = Window::make({SpaceFamily::lomega, 1, 1, 30, 2});
            ColoredCover cover = build_lomega_cover({3}, 1, tower);
            bool tower_covered = validate_cover(cover, max_block_diameter(cover)).accepted();
            d = std::string("plane=") + verdict_name(big.verdict) +
                " brute=" + (brute_blocked ? "unsat" : "?") +
                " tower_cover=" + (tower_covered ? "accepted" : "rejected");
            return plane_blocked && brute_blocked && tower_covered;
        });

    run({10, "sat witnesses restrict to sub-windows", 60}, [&](std::string& d) {
        SuiteReport rep = run_restriction_suite(50, 7, opts);
        d = summarize(rep);
        return rep.all_pass();
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
