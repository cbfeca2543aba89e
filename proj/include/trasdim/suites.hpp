#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trasdim/solver.hpp"

namespace trasdim {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

// Named verification suites behind `verify --suite ...`. Each is seeded and
// deterministic; the returned report carries per-check pass counts.
SuiteReport run_metric_suite(std::uint64_t trials, std::uint64_t seed);
SuiteReport run_lemmaD_suite(std::uint64_t trials, std::uint64_t seed);
SuiteReport run_lemmaF_suite(std::uint64_t trials, std::uint64_t seed);
SuiteReport run_lemma5_suite(std::uint64_t trials, std::uint64_t seed);
SuiteReport run_lemma3_suite(int k, Dist diam_cap, bool brute_confirm, const SolverOptions& opts);
SuiteReport run_lemma4_suite(std::uint64_t trials, std::uint64_t seed, const SolverOptions& opts);
SuiteReport run_thm2_suite(const SolverOptions& opts);
SuiteReport run_thm3_suite(int k, Dist diam_cap, const SolverOptions& opts);

// Additional suites used by the acceptance harness.
SuiteReport run_solver_oracle_suite(std::uint64_t trials, std::uint64_t seed,
                                    const SolverOptions& opts);
SuiteReport run_zn_cover_suite();
SuiteReport run_restriction_suite(std::uint64_t trials, std::uint64_t seed,
                                  const SolverOptions& opts);

std::string format_report(const SuiteReport& report);

} // namespace trasdim
