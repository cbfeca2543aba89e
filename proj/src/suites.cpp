#include "trasdim/suites.hpp"

#include <algorithm>
#include <set>

#include "trasdim/borst.hpp"
#include "trasdim/covers.hpp"
#include "trasdim/util.hpp"

namespace trasdim {

namespace {

Point random_tower_point(Rng& rng, int max_level, Coord coord_bound) {
    Point p;
    p.level = std::int32_t(rng.range(1, max_level));
    p.coords.resize(p.level);
    for (auto& c : p.coords) c = Coord(rng.range(-coord_bound, coord_bound));
    return p;
}

ExplicitSystem random_system(Rng& rng, int max_labels, int max_members) {
    int nl = int(rng.range(1, max_labels));
    LabelSet universe;
    for (int i = 1; i <= nl; ++i) universe.push_back(std::uint32_t(i));
    std::set<LabelSet> members;
    int count = int(rng.range(0, max_members));
    for (int i = 0; i < count; ++i) {
        LabelSet m;
        for (std::uint32_t v : universe)
            if (rng.chance(40)) m.push_back(v);
        if (m.empty()) m.push_back(universe[std::size_t(rng.range(0, nl - 1))]);
        members.insert(std::move(m));
    }
    return ExplicitSystem(std::move(universe), std::move(members));
}

} // namespace

SuiteReport run_metric_suite(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "metric";
    Rng rng(seed);

    CheckResult axioms{"axioms", true, 0, trials, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        Point a = random_tower_point(rng, 6, 100);
        Point b = rng.chance(5) ? a : random_tower_point(rng, 6, 100);
        Point c = random_tower_point(rng, 6, 100);
        Dist ab = tower_dist(a, b), ba = tower_dist(b, a);
        Dist ac = tower_dist(a, c), bc = tower_dist(b, c);
        bool ok = (ab == ba) && ((ab == 0) == (a == b)) && tower_dist(a, a) == 0 &&
                  ac <= ab + bc;
        if (ok)
            ++axioms.passed;
        else
            axioms.pass = false;
    }
    rep.checks.push_back(axioms);

    // on a single level the tower metric is the sup metric
    CheckResult reduce{"single_level_reduction", true, 0, 0, ""};
    for (int lvl = 1; lvl <= 2; ++lvl) {
        std::vector<Point> pts;
        Point p;
        p.level = lvl;
        p.coords.assign(lvl, 0);
        std::vector<Coord> vals{-3, -1, 0, 2, 3};
        if (lvl == 1) {
            for (Coord v : vals) {
                p.coords[0] = v;
                pts.push_back(p);
            }
        } else {
            for (Coord v : vals)
                for (Coord u : vals) {
                    p.coords[0] = v;
                    p.coords[1] = u;
                    pts.push_back(p);
                }
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                ++reduce.total;
                if (tower_dist(pts[i], pts[j]) == sup_dist(pts[i].coords, pts[j].coords))
                    ++reduce.passed;
                else
                    reduce.pass = false;
            }
    }
    rep.checks.push_back(reduce);
    return rep;
}

SuiteReport run_lemmaD_suite(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "lemmaD";
    Rng rng(seed);
    CheckResult c{"ord_equals_max_cardinality", true, 0, trials, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        ExplicitSystem m = random_system(rng, 8, 40);
        if (ord_of_system(m) == Ordinal::nat(max_member_cardinality(m)))
            ++c.passed;
        else
            c.pass = false;
    }
    rep.checks.push_back(c);
    return rep;
}

SuiteReport run_lemmaF_suite(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "lemmaF";
    Rng rng(seed);
    CheckResult c{"relabeling_monotone", true, 0, trials, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        ExplicitSystem m = random_system(rng, 6, 24);
        // random injective relabeling into a larger pool
        std::vector<std::uint32_t> pool;
        for (std::uint32_t v = 1; v <= 12; ++v) pool.push_back(v);
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[std::size_t(rng.range(0, std::int64_t(i) - 1))]);
        auto phi = [&](std::uint32_t v) { return pool[v - 1]; };

        LabelSet universe2;
        for (std::uint32_t v : m.universe()) universe2.push_back(phi(v));
        std::sort(universe2.begin(), universe2.end());
        std::set<LabelSet> members2;
        for (const LabelSet& mem : m.members()) {
            LabelSet img;
            for (std::uint32_t v : mem) img.push_back(phi(v));
            std::sort(img.begin(), img.end());
            members2.insert(std::move(img));
        }
        ExplicitSystem m2(std::move(universe2), std::move(members2));
        if (cmp(ord_of_system(m), ord_of_system(m2)) <= 0)
            ++c.passed;
        else
            c.pass = false;
    }
    rep.checks.push_back(c);
    return rep;
}

SuiteReport run_lemma5_suite(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "lemma5";
    Rng rng(seed);
    CheckResult c{"intermediate_value", true, 0, 0, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        ExplicitSystem m = random_system(rng, 5, 20);
        std::uint32_t nl = std::uint32_t(m.universe().size());
        for (std::uint32_t tb = 0; tb < (1u << nl); ++tb) {
            LabelSet tau;
            for (std::uint32_t i = 0; i < nl; ++i)
                if (tb & (1u << i)) tau.push_back(m.universe()[i]);
            auto alpha = ord_of_system(m.derivative(tau)).as_natural();
            for (std::uint64_t xi = 0; xi <= *alpha; ++xi) {
                ++c.total;
                bool found = false;
                for (std::uint32_t sb = 0; sb < (1u << nl) && !found; ++sb) {
                    if (sb & tb) continue; // sigma must avoid tau
                    LabelSet sigma = tau;
                    for (std::uint32_t i = 0; i < nl; ++i)
                        if (sb & (1u << i)) sigma.push_back(m.universe()[i]);
                    std::sort(sigma.begin(), sigma.end());
                    if (ord_of_system(m.derivative(sigma)) == Ordinal::nat(xi)) found = true;
                }
                if (found)
                    ++c.passed;
                else
                    c.pass = false;
            }
        }
    }
    rep.checks.push_back(c);
    return rep;
}

SuiteReport run_lemma3_suite(int k, Dist diam_cap, bool brute_confirm, const SolverOptions& opts) {
    SuiteReport rep;
    rep.suite = "lemma3";
    if (k < 1) k = 1;
    for (Dist D = 2; D <= diam_cap; ++D) {
        WindowSpec spec;
        if (k == 1) {
            spec.family = SpaceFamily::zn;
            spec.dims = 2;
            spec.side = Coord(D);
        } else {
            spec.family = SpaceFamily::kzn;
            spec.dims = 2;
            spec.scale = k;
            spec.side = Coord(D * k);
        }
        DecisionInstance inst{Window::make(spec), {2 * Dist(k), 2 * Dist(k)}, D * Dist(k)};
        Certificate cert = decide_cover(inst, opts);
        CheckResult c;
        c.name = "unsat_D" + std::to_string(D);
        c.total = 1;
        c.pass = cert.verdict == Verdict::unsat;
        c.passed = c.pass ? 1 : 0;
        c.note = "verdict=" + verdict_name(cert.verdict) + " nodes=" + std::to_string(cert.stats.nodes);
        rep.checks.push_back(c);
    }
    if (brute_confirm && k == 1 && diam_cap >= 2) {
        WindowSpec spec{SpaceFamily::zn, 2, 1, 2, 1};
        DecisionInstance inst{Window::make(spec), {2, 2}, 2};
        Certificate cert = brute_force_decide(inst);
        CheckResult c;
        c.name = "brute_confirm_D2";
        c.total = 1;
        c.pass = cert.verdict == Verdict::unsat;
        c.passed = c.pass ? 1 : 0;
        c.note = "colorings=" + std::to_string(cert.stats.nodes);
        rep.checks.push_back(c);
    }
    return rep;
}

SuiteReport run_lemma4_suite(std::uint64_t trials, std::uint64_t seed, const SolverOptions& opts) {
    SuiteReport rep;
    rep.suite = "lemma4";
    Rng rng(seed);
    CheckResult c{"expansion_shifts_radii", true, 0, trials, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        Dist m = rng.range(0, 3);
        ColoredCover cover;
        Dist D = 0;
        if (t % 2 == 0) {
            // solver witness on a small line window
            WindowSpec spec{SpaceFamily::zn, 1, 1, Coord(rng.range(3, 6)), 1};
            auto w = Window::make(spec);
            std::vector<Dist> pre;
            int fams = int(rng.range(1, 2));
            for (int i = 0; i < fams; ++i) pre.push_back(rng.range(1, 3) + 2 * m);
            MinDiamResult md = min_diameter(w, pre, opts);
            if (md.status != MinDiamResult::Status::found) {
                c.pass = false;
                continue;
            }
            D = md.value + rng.range(0, 1);
            Certificate cert = decide_cover({w, pre, D}, opts);
            if (cert.verdict != Verdict::sat) {
                c.pass = false;
                continue;
            }
            cover = *cert.witness;
        } else {
            int dims = int(rng.range(1, 2));
            Dist r = rng.range(1, 3) + 2 * m;
            Dist L = Dist(dims + 1) * (r + 1);
            WindowSpec spec{SpaceFamily::zn, dims, 1, Coord(L + rng.range(0, 4)), 1};
            cover = build_zn_cover(dims, r, Window::make(spec));
            D = max_block_diameter(cover);
        }
        if (!validate_cover(cover, D).accepted()) {
            c.pass = false;
            continue;
        }
        // expand into the m-neighborhood window and drop radii back down
        WindowSpec aspec = *cover.window->spec();
        aspec.side += Coord(m);
        ColoredCover expanded = expand_cover(cover, m, Window::make(aspec));
        for (CoverEntry& e : expanded.entries) e.radius -= 2 * m;
        bool ok = true;
        for (CoverEntry& e : expanded.entries)
            if (e.radius < 1) ok = false;
        if (ok && validate_cover(expanded, D + 2 * m).accepted())
            ++c.passed;
        else
            c.pass = false;
    }
    rep.checks.push_back(c);
    return rep;
}

SuiteReport run_thm2_suite(const SolverOptions&) {
    SuiteReport rep;
    rep.suite = "thm2";
    for (int n = 1; n <= 2; ++n) {
        WindowSpec spec{SpaceFamily::lomega, 1, 1, 30, n + 1};
        auto w = Window::make(spec);
        std::vector<std::vector<Dist>> taus;
        if (n == 1) {
            for (Dist v = 2; v <= 6; ++v) taus.push_back({v});
        } else {
            for (Dist a = 3; a <= 6; ++a)
                for (Dist b = a + 1; b <= 6; ++b) taus.push_back({a, b});
        }
        for (const auto& tau : taus) {
            ColoredCover cover = build_lomega_cover(tau, n, w);
            Dist D = max_block_diameter(cover);
            ValidationReport v = validate_cover(cover, D);
            CheckResult c;
            c.name = "n" + std::to_string(n) + "_tau";
            for (Dist t : tau) c.name += "_" + std::to_string(t);
            c.total = 1;
            c.pass = v.accepted() && int(cover.entries.size()) == n + 1;
            c.passed = c.pass ? 1 : 0;
            c.note = "achieved_diam=" + std::to_string(D);
            rep.checks.push_back(c);
        }
    }
    return rep;
}

SuiteReport run_thm3_suite(int k, Dist diam_cap, const SolverOptions& opts) {
    SuiteReport rep;
    rep.suite = "thm3";
    if (k < 1) k = 1;
    std::vector<Dist> radii;
    for (Dist v = 2; v <= Dist(k) + 1; ++v) radii.push_back(v);
    WindowSpec spec{SpaceFamily::zn, k, 1, Coord(diam_cap), 1};
    auto w = Window::make(spec);
    for (Dist D = 2; D <= diam_cap; ++D) {
        Certificate cert = decide_cover({w, radii, D}, opts);
        CheckResult c;
        c.name = "sigma_in_A_D" + std::to_string(D);
        c.total = 1;
        c.pass = cert.verdict == Verdict::unsat;
        c.passed = c.pass ? 1 : 0;
        c.note = "verdict=" + verdict_name(cert.verdict) + " nodes=" + std::to_string(cert.stats.nodes);
        rep.checks.push_back(c);
    }
    return rep;
}

SuiteReport run_solver_oracle_suite(std::uint64_t trials, std::uint64_t seed,
                                    const SolverOptions& opts) {
    SuiteReport rep;
    rep.suite = "solver_oracle";
    Rng rng(seed);

    CheckResult c{"random_instances", true, 0, trials, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        int dims = int(rng.range(1, 2));
        Coord side = Coord(dims == 1 ? rng.range(3, 6) : rng.range(1, 2));
        auto base = Window::make({SpaceFamily::zn, dims, 1, side, 1});
        std::vector<Point> pts;
        for (PointIndex i = 0; i < base->size(); ++i)
            if (rng.chance(60)) pts.push_back(base->point(i));
        while (pts.size() > 14) pts.erase(pts.begin() + std::size_t(rng.range(0, std::int64_t(pts.size()) - 1)));
        if (pts.empty()) pts.push_back(base->point(0));
        auto w = Window::from_points(Metric::sup, std::move(pts));
        std::vector<Dist> radii;
        int m = int(rng.range(1, 2));
        for (int i = 0; i < m; ++i) radii.push_back(rng.range(1, 4));
        Dist D = rng.range(0, w->diameter());
        DecisionInstance inst{w, radii, D};
        Certificate fast = decide_cover(inst, opts);
        Certificate oracle = brute_force_decide(inst);
        bool ok = fast.verdict == oracle.verdict;
        if (ok && fast.verdict == Verdict::sat)
            ok = validate_cover(*fast.witness, D).accepted();
        if (ok)
            ++c.passed;
        else
            c.pass = false;
    }
    rep.checks.push_back(c);

    // worked examples on the ten-point line {0..9}
    std::vector<Point> line;
    for (Coord x = 0; x <= 9; ++x) line.push_back({1, {x}});
    auto w10 = Window::from_points(Metric::sup, line);
    auto decide10 = [&](std::vector<Dist> radii, Dist D) {
        return decide_cover({w10, std::move(radii), D}, opts).verdict;
    };
    CheckResult ex{"worked_examples", true, 0, 0, ""};
    auto expect = [&](bool cond) {
        ++ex.total;
        if (cond)
            ++ex.passed;
        else
            ex.pass = false;
    };
    expect(decide10({3}, 9) == Verdict::sat);
    expect(decide10({3}, 2) == Verdict::unsat);
    expect(brute_force_decide({w10, {3}, 2}).verdict == Verdict::unsat);
    {
        SolverOptions canon = opts;
        canon.canonical = true;
        canon.cache = nullptr;
        Certificate cert = decide_cover({w10, {3, 3}, 1}, canon);
        expect(cert.verdict == Verdict::sat);
        // the canonical witness splits the line into {0,1},{4,5},{8,9} and {2,3},{6,7}
        ColoredCover expected;
        expected.window = w10;
        expected.entries = {{3, Family{{{0, 1}, {4, 5}, {8, 9}}}}, {3, Family{{{2, 3}, {6, 7}}}}};
        canonicalize(expected);
        expect(cert.witness->entries.size() == 2 &&
               cert.witness->entries[0].family.blocks == expected.entries[0].family.blocks &&
               cert.witness->entries[1].family.blocks == expected.entries[1].family.blocks);
    }
    expect(min_diameter(w10, {2, 2}, opts).value == 0);
    expect(min_diameter(w10, {3, 3}, opts).value == 1);
    expect(min_diameter(w10, {3}, opts).value == 9);
    {
        auto w1 = Window::from_points(Metric::sup, {{1, {0}}});
        expect(decide_cover({w1, {5}, 0}, opts).verdict == Verdict::sat);
        expect(brute_force_decide({w1, {5}, 0}).verdict == Verdict::sat);
    }
    rep.checks.push_back(ex);
    return rep;
}

SuiteReport run_zn_cover_suite() {
    SuiteReport rep;
    rep.suite = "zn_cover";
    for (int n = 1; n <= 3; ++n) {
        for (Dist r : {Dist(2), Dist(5), Dist(10)}) {
            Dist L = Dist(n + 1) * (r + 1);
            // as much window as a desk-scale run affords: several cells per
            // axis in low dimension, at least one full cell plus boundary in Z^3
            Coord side;
            if (n == 1)
                side = Coord(5 * L);
            else if (n == 2)
                side = Coord(std::min<Dist>(5 * L, 170));
            else
                side = Coord(std::min<Dist>(5 * L, L + 2 * r));
            auto w = Window::make({SpaceFamily::zn, n, 1, side, 1});
            ColoredCover cover = build_zn_cover(n, r, w);
            ValidationReport v = validate_cover(cover, Dist(n + 1) * (r + 1));
            CheckResult c;
            c.name = "n" + std::to_string(n) + "_r" + std::to_string(r);
            c.total = 1;
            c.pass = v.accepted() && int(cover.entries.size()) == n + 1 &&
                     v.max_block_diameter <= Dist(n + 1) * (r + 1);
            c.passed = c.pass ? 1 : 0;
            c.note = "side=" + std::to_string(side) +
                     " max_diam=" + std::to_string(v.max_block_diameter);
            rep.checks.push_back(c);
        }
    }
    return rep;
}

SuiteReport run_restriction_suite(std::uint64_t trials, std::uint64_t seed,
                                  const SolverOptions& opts) {
    SuiteReport rep;
    rep.suite = "restriction";
    Rng rng(seed);
    CheckResult c{"witness_restricts", true, 0, trials, ""};
    for (std::uint64_t t = 0; t < trials; ++t) {
        int dims = int(rng.range(1, 2));
        Coord side = Coord(dims == 1 ? rng.range(4, 8) : rng.range(2, 3));
        auto w = Window::make({SpaceFamily::zn, dims, 1, side, 1});
        std::vector<Dist> radii;
        int m = int(rng.range(1, 2));
        for (int i = 0; i < m; ++i) radii.push_back(rng.range(1, 3));
        MinDiamResult md = min_diameter(w, radii, opts);
        if (md.status != MinDiamResult::Status::found) {
            c.pass = false;
            continue;
        }
        Dist D = md.value + rng.range(0, 2);
        Certificate cert = decide_cover({w, radii, D}, opts);
        if (cert.verdict != Verdict::sat) {
            c.pass = false;
            continue;
        }
        std::vector<Point> pts;
        for (PointIndex i = 0; i < w->size(); ++i)
            if (rng.chance(70)) pts.push_back(w->point(i));
        if (pts.empty()) pts.push_back(w->point(0));
        auto sub = Window::from_points(Metric::sup, std::move(pts));
        ColoredCover restricted = restrict_cover(*cert.witness, sub);
        if (validate_cover(restricted, D).accepted())
            ++c.passed;
        else
            c.pass = false;
    }
    rep.checks.push_back(c);
    return rep;
}

std::string format_report(const SuiteReport& report) {
    std::string out;
    for (const CheckResult& c : report.checks) {
        out += "check " + report.suite + "." + c.name + ": " + (c.pass ? "PASS" : "FAIL") + " (" +
               std::to_string(c.passed) + "/" + std::to_string(c.total) + ")";
        if (!c.note.empty()) out += " " + c.note;
        out += "\n";
    }
    out += "suite " + report.suite + ": " + (report.all_pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace trasdim
