// Command-line surface: decide cover instances on finite windows, scan
// growth profiles, run the verification suites, build constructive covers,
// and compute the ordinal rank of the truncated obstruction system.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "trasdim/borst.hpp"
#include "trasdim/cache.hpp"
#include "trasdim/json_io.hpp"
#include "trasdim/suites.hpp"
#include "trasdim/util.hpp"

using namespace trasdim;

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitFail = 3;
constexpr int kExitUsage = 64;
constexpr int kExitError = 65;

struct WindowFlags {
    std::string space = "zn";
    int dims = 1;
    int scale = 1;
    Coord side = 0;
    int level_cap = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--space", space, "window family: zn | kzn | lomega | linf")
            ->check(CLI::IsMember({"zn", "kzn", "lomega", "linf"}));
        cmd->add_option("--dims", dims, "lattice dimension (zn/kzn)");
        cmd->add_option("--scale", scale, "lattice step k of (kZ)^n (kzn)");
        cmd->add_option("--side", side, "sup-norm bound of the window")->required();
        cmd->add_option("--level-cap", level_cap, "highest tower level (lomega/linf)");
    }

    WindowSpec spec() const {
        WindowSpec s;
        auto fam = family_from_name(space);
        if (!fam) throw CLI::ValidationError("--space", "unknown family");
        s.family = *fam;
        s.dims = dims;
        s.scale = scale;
        s.side = side;
        s.level_cap = level_cap;
        return s;
    }
};

struct SolverFlags {
    std::uint64_t budget = 100'000'000;
    bool canonical = false;
    bool no_presolve = false;
    std::string cache_dir;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget", budget, "search node budget (>= 10000)");
        cmd->add_flag("--canonical", canonical, "canonical witness mode");
        cmd->add_flag("--no-presolve", no_presolve, "disable sub-window presolve");
        cmd->add_option("--cache-dir", cache_dir,
                        "result cache directory (default: $TRASDIM_CACHE_DIR)");
    }

    SolverOptions options(std::unique_ptr<ResultCache>& cache_holder) const {
        if (budget < 10'000) throw CLI::ValidationError("--budget", "budget must be >= 10000");
        SolverOptions opts;
        opts.node_budget = budget;
        opts.canonical = canonical;
        opts.presolve = !no_presolve;
        std::string dir = cache_dir;
        if (dir.empty()) {
            if (const char* env = std::getenv("TRASDIM_CACHE_DIR")) dir = env;
        }
        if (!dir.empty()) {
            cache_holder = std::make_unique<ResultCache>(std::filesystem::path(dir) /
                                                         "results.jsonl");
            opts.cache = cache_holder.get();
        }
        return opts;
    }
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
}

bool parse_range(const std::string& text, Coord& lo, Coord& hi) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = Coord(std::stol(text));
            return true;
        }
        lo = Coord(std::stol(text.substr(0, pos)));
        hi = Coord(std::stol(text.substr(pos + 2)));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

int cmd_decide(const WindowFlags& wf, const SolverFlags& sf, const std::vector<Dist>& radii,
               Dist diam, const std::string& out_path) {
    std::unique_ptr<ResultCache> cache;
    SolverOptions opts = sf.options(cache);
    DecisionInstance inst{Window::make(wf.spec()), radii, diam};
    Certificate cert = decide_cover(inst, opts);
    write_output(certificate_to_json(cert, inst).dump(2), out_path);
    switch (cert.verdict) {
    case Verdict::sat: return kExitSat;
    case Verdict::unsat: return kExitUnsat;
    case Verdict::unknown: return kExitUnknown;
    }
    return kExitError;
}

int cmd_scan(const WindowFlags& wf, const SolverFlags& sf, const std::vector<Dist>& radii,
             const std::string& sides, std::optional<Dist> diam_cap, unsigned jobs,
             const std::string& out_path) {
    Coord lo = 0, hi = -1;
    if (!parse_range(sides, lo, hi) || hi < lo)
        throw CLI::ValidationError("--sides", "expected a non-empty range like 3..6");
    std::unique_ptr<ResultCache> cache;
    SolverOptions opts = sf.options(cache);

    std::vector<Coord> side_list;
    for (Coord s = lo; s <= hi; ++s) side_list.push_back(s);
    std::vector<std::string> rows(side_list.size());

    std::string radii_text;
    for (std::size_t i = 0; i < radii.size(); ++i)
        radii_text += (i ? " " : "") + std::to_string(radii[i]);

    auto run_row = [&](std::size_t idx) {
        WindowSpec spec = wf.spec();
        spec.side = side_list[idx];
        auto w = Window::make(spec);
        MinDiamResult md = min_diameter(w, radii, opts, diam_cap);
        std::string value;
        switch (md.status) {
        case MinDiamResult::Status::found: {
            value = std::to_string(md.value);
            // re-validate the witness backing the row before it is written
            Certificate cert = decide_cover({w, radii, md.value}, opts);
            if (cert.verdict != Verdict::sat || !validate_cover(*cert.witness, md.value).accepted())
                value = "INVALID";
            break;
        }
        case MinDiamResult::Status::unsat_at_cap:
            value = "UNSAT@" + std::to_string(md.value);
            break;
        case MinDiamResult::Status::unknown: value = "UNKNOWN"; break;
        }
        rows[idx] = std::to_string(side_list[idx]) + "," + radii_text + "," + value + "," +
                    std::to_string(md.nodes);
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < side_list.size(); ++i) run_row(i);
    } else {
        std::mutex mu;
        std::size_t next = 0;
        auto worker = [&]() {
            for (;;) {
                std::size_t idx;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= side_list.size()) return;
                    idx = next++;
                }
                run_row(idx);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::string csv = "side,radii,min_diameter,nodes\n";
    for (const std::string& r : rows) csv += r + "\n";
    write_output(csv, out_path);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t trials, bool trials_set,
               std::uint64_t seed, int k, Dist diam_cap, const SolverFlags& sf,
               const std::string& out_path) {
    std::unique_ptr<ResultCache> cache;
    SolverOptions opts = sf.options(cache);

    auto pick = [&](std::uint64_t dflt) { return trials_set ? trials : dflt; };
    std::vector<SuiteReport> reports;
    auto run_one = [&](const std::string& name) {
        if (name == "metric") reports.push_back(run_metric_suite(pick(10'000), seed));
        else if (name == "lemmaD") reports.push_back(run_lemmaD_suite(pick(200), seed));
        else if (name == "lemmaF") reports.push_back(run_lemmaF_suite(pick(100), seed));
        else if (name == "lemma5") reports.push_back(run_lemma5_suite(pick(30), seed));
        else if (name == "lemma3") reports.push_back(run_lemma3_suite(k, diam_cap, true, opts));
        else if (name == "lemma4") reports.push_back(run_lemma4_suite(pick(100), seed, opts));
        else if (name == "thm2") reports.push_back(run_thm2_suite(opts));
        else if (name == "thm3") reports.push_back(run_thm3_suite(k, diam_cap, opts));
        else throw CLI::ValidationError("--suite", "unknown suite: " + name);
    };
    if (suite == "all") {
        for (const char* name :
             {"metric", "lemmaD", "lemmaF", "lemma5", "lemma3", "lemma4", "thm2", "thm3"})
            run_one(name);
    } else {
        run_one(suite);
    }

    bool all = true;
    std::string text;
    for (const SuiteReport& r : reports) {
        text += format_report(r);
        all = all && r.all_pass();
    }
    std::cout << text;
    if (!out_path.empty()) {
        Json j = Json::array();
        for (const SuiteReport& r : reports) {
            Json js;
            js["suite"] = r.suite;
            js["pass"] = r.all_pass();
            Json checks = Json::array();
            for (const CheckResult& c : r.checks)
                checks.push_back({{"name", c.name},
                                  {"pass", c.pass},
                                  {"passed", c.passed},
                                  {"total", c.total},
                                  {"note", c.note}});
            js["checks"] = std::move(checks);
            j.push_back(std::move(js));
        }
        std::ofstream out(out_path, std::ios::binary);
        out << j.dump(2) << "\n";
    }
    return all ? 0 : kExitFail;
}

int cmd_build(const std::string& type, const WindowFlags& wf, int n, Dist r,
              const std::vector<Dist>& tau, const std::string& out_path) {
    ColoredCover cover;
    if (type == "zn") {
        auto w = Window::make(wf.spec());
        cover = build_zn_cover(wf.dims, r, w);
    } else if (type == "lomega") {
        if (tau.empty()) throw CLI::ValidationError("--tau", "lomega build needs --tau");
        int nn = n > 0 ? n : int(tau.size());
        auto w = Window::make(wf.spec());
        cover = build_lomega_cover(tau, nn, w);
    } else {
        throw CLI::ValidationError("--type", "expected zn or lomega");
    }
    Dist D = max_block_diameter(cover);
    ValidationReport v = validate_cover(cover, D);
    Json j;
    j["cover"] = cover_to_json(cover);
    j["achieved_diameter"] = D;
    j["accepted"] = v.accepted();
    j["issues"] = v.issues;
    write_output(j.dump(2), out_path);
    return v.accepted() ? 0 : 1;
}

int cmd_ord(const WindowFlags& wf, const SolverFlags& sf, Dist diam, std::uint32_t r_max,
            const std::string& out_path) {
    std::unique_ptr<ResultCache> cache;
    SolverOptions opts = sf.options(cache);
    auto w = Window::make(wf.spec());
    TruncatedA ta(w, diam, r_max, opts);
    OrdInterval raw = ord_truncated_A(ta);
    OrdInterval fast = largest_member_cardinality(ta);

    Json j;
    j["window"] = window_to_json(*w);
    j["diam"] = diam;
    j["r_max"] = r_max;
    j["ordinal"] = raw.lower.render();
    j["ordinal_upper"] = raw.upper.render();
    j["exact"] = raw.exact();
    j["largest_member_lower"] = fast.lower.render();
    j["largest_member_upper"] = fast.upper.render();
    // the window itself is a bounded space; the computed rank is evidence
    // about covers at this scale, not the dimension of the window
    j["window_trasdim"] = DimensionValue::minus_one().render();
    bool paths_agree = !raw.exact() || !fast.exact() || raw.lower == fast.lower;
    j["paths_agree"] = paths_agree;
    write_output(j.dump(2), out_path);
    if (!paths_agree) return kExitFail;
    return raw.exact() ? 0 : kExitUnknown;
}

int cmd_window(const WindowFlags& wf, const std::string& points_csv,
               const std::string& matrix_csv) {
    auto w = Window::make(wf.spec());
    if (!points_csv.empty()) {
        std::ofstream out(points_csv, std::ios::binary);
        out << "index,level";
        for (int d = 0; d < w->pad_dims(); ++d) out << ",c" << d;
        out << "\n";
        for (PointIndex i = 0; i < w->size(); ++i) {
            out << i << "," << w->level(i);
            auto c = w->padded(i);
            for (int d = 0; d < w->pad_dims(); ++d) out << "," << c[d];
            out << "\n";
        }
    }
    if (!matrix_csv.empty()) {
        std::ofstream out(matrix_csv, std::ios::binary);
        for (PointIndex i = 0; i < w->size(); ++i) {
            for (PointIndex j = 0; j < w->size(); ++j)
                out << (j ? "," : "") << w->distance(i, j);
            out << "\n";
        }
    }
    std::cout << "points=" << w->size() << " diameter=" << w->diameter() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored-cover decision procedures on finite metric windows"};
    app.require_subcommand(1);

    // decide
    auto* decide = app.add_subcommand("decide", "decide one cover instance");
    WindowFlags dw;
    SolverFlags ds;
    std::vector<Dist> d_radii;
    Dist d_diam = 0;
    std::string d_out;
    dw.attach(decide);
    ds.attach(decide);
    decide->add_option("--radii", d_radii, "family disjointness radii")
        ->required()
        ->delimiter(',');
    decide->add_option("--diam", d_diam, "block diameter bound")->required();
    decide->add_option("--out", d_out, "certificate output path (default stdout)");

    // scan
    auto* scan = app.add_subcommand("scan", "minimum diameter across window sides");
    WindowFlags sw;
    SolverFlags ss;
    std::vector<Dist> s_radii;
    std::string s_sides, s_out;
    Dist s_cap = -1;
    unsigned s_jobs = 1;
    sw.attach(scan);
    scan->get_option("--side")->required(false); // sides come from the range
    ss.attach(scan);
    scan->add_option("--radii", s_radii, "family disjointness radii")->required()->delimiter(',');
    scan->add_option("--sides", s_sides, "side range, e.g. 3..6")->required();
    scan->add_option("--diam-cap", s_cap, "stop the search at this diameter");
    scan->add_option("--jobs", s_jobs, "parallel rows");
    scan->add_option("--out", s_out, "CSV output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    SolverFlags vs;
    std::string v_suite, v_out;
    std::uint64_t v_trials = 0, v_seed = 7;
    int v_k = 1;
    Dist v_cap = 4;
    vs.attach(verify);
    verify
        ->add_option("--suite", v_suite,
                     "all | metric | lemmaD | lemmaF | lemma5 | lemma3 | lemma4 | thm2 | thm3")
        ->required();
    auto* trials_opt = verify->add_option("--trials", v_trials, "trial count override");
    verify->add_option("--seed", v_seed, "random seed");
    verify->add_option("--k", v_k, "scale/index parameter (lemma3, thm3)");
    verify->add_option("--diam-cap", v_cap, "diameter range bound (lemma3, thm3)");
    verify->add_option("--out", v_out, "JSON report path");

    // build
    auto* build = app.add_subcommand("build", "build and export a constructive cover");
    WindowFlags bw;
    std::string b_type = "zn", b_out;
    int b_n = 0;
    Dist b_r = 2;
    std::vector<Dist> b_tau;
    bw.attach(build);
    build->add_option("--type", b_type, "zn | lomega")->required();
    build->add_option("--r", b_r, "disjointness radius (zn)");
    build->add_option("--n", b_n, "family count parameter (lomega; default |tau|)");
    build->add_option("--tau", b_tau, "radii of the non-n families (lomega)")->delimiter(',');
    build->add_option("--out", b_out, "cover output path (default stdout)");

    // ord
    auto* ord = app.add_subcommand("ord", "ordinal rank of the truncated obstruction system");
    WindowFlags ow;
    SolverFlags os;
    Dist o_diam = 0;
    std::uint32_t o_rmax = 4;
    std::string o_out;
    ow.attach(ord);
    os.attach(ord);
    ord->add_option("--diam", o_diam, "block diameter bound")->required();
    ord->add_option("--r-max", o_rmax, "label range 1..r_max");
    ord->add_option("--out", o_out, "JSON output path (default stdout)");

    // window export
    auto* window = app.add_subcommand("window", "export window points / distance matrix");
    WindowFlags ww;
    std::string w_points, w_matrix;
    ww.attach(window);
    window->add_option("--points-csv", w_points, "write the point list as CSV");
    window->add_option("--matrix-csv", w_matrix, "write the full distance matrix as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(decide)) return cmd_decide(dw, ds, d_radii, d_diam, d_out);
        if (app.got_subcommand(scan)) {
            std::optional<Dist> cap;
            if (s_cap >= 0) cap = s_cap;
            return cmd_scan(sw, ss, s_radii, s_sides, cap, s_jobs, s_out);
        }
        if (app.got_subcommand(verify))
            return cmd_verify(v_suite, v_trials, trials_opt->count() > 0, v_seed, v_k, v_cap, vs,
                              v_out);
        if (app.got_subcommand(build)) return cmd_build(b_type, bw, b_n, b_r, b_tau, b_out);
        if (app.got_subcommand(ord)) return cmd_ord(ow, os, o_diam, o_rmax, o_out);
        if (app.got_subcommand(window)) return cmd_window(ww, w_points, w_matrix);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
