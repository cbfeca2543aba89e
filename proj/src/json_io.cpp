#include "trasdim/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace trasdim {

Json window_spec_to_json(const WindowSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    j["side"] = spec.side;
    switch (spec.family) {
    case SpaceFamily::zn:
        j["dims"] = spec.dims;
        break;
    case SpaceFamily::kzn:
        j["dims"] = spec.dims;
        j["scale"] = spec.scale;
        break;
    case SpaceFamily::lomega:
    case SpaceFamily::linf:
        j["level_cap"] = spec.level_cap;
        break;
    }
    return j;
}

WindowSpec window_spec_from_json(const Json& j) {
    WindowSpec spec;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown window family");
    spec.family = *fam;
    spec.side = j.at("side").get<Coord>();
    if (spec.family == SpaceFamily::zn || spec.family == SpaceFamily::kzn)
        spec.dims = j.at("dims").get<int>();
    if (spec.family == SpaceFamily::kzn) spec.scale = j.at("scale").get<int>();
    if (spec.family == SpaceFamily::lomega || spec.family == SpaceFamily::linf)
        spec.level_cap = j.at("level_cap").get<int>();
    return spec;
}

Json point_to_json(const Point& p, Metric metric) {
    if (metric == Metric::sup) return Json(p.coords);
    Json j;
    j["level"] = p.level;
    j["coords"] = p.coords;
    return j;
}

Point point_from_json(const Json& j, int sup_level) {
    Point p;
    if (j.is_array()) {
        p.coords = j.get<std::vector<Coord>>();
        p.level = sup_level > 0 ? sup_level : std::int32_t(p.coords.size());
    } else {
        p.level = j.at("level").get<std::int32_t>();
        p.coords = j.at("coords").get<std::vector<Coord>>();
    }
    if (int(p.coords.size()) != p.level)
        throw std::invalid_argument("point level does not match coordinate count");
    return p;
}

Json window_to_json(const Window& w) {
    if (w.spec()) return window_spec_to_json(*w.spec());
    Json j;
    j["metric"] = w.metric() == Metric::sup ? "sup" : "dinf";
    Json pts = Json::array();
    for (PointIndex i = 0; i < w.size(); ++i) pts.push_back(point_to_json(w.point(i), w.metric()));
    j["points"] = std::move(pts);
    return j;
}

std::shared_ptr<const Window> window_from_json(const Json& j) {
    if (j.contains("family")) return Window::make(window_spec_from_json(j));
    Metric metric = j.at("metric").get<std::string>() == "sup" ? Metric::sup : Metric::dinf;
    std::vector<Point> pts;
    for (const Json& pj : j.at("points")) pts.push_back(point_from_json(pj, 0));
    return Window::from_points(metric, std::move(pts));
}

Json cover_to_json(const ColoredCover& cover) {
    Json j;
    j["window"] = window_to_json(*cover.window);
    Json entries = Json::array();
    for (const CoverEntry& e : cover.entries) {
        Json je;
        je["radius"] = e.radius;
        Json blocks = Json::array();
        for (const Block& b : e.family.blocks) {
            Json jb = Json::array();
            for (PointIndex p : b)
                jb.push_back(point_to_json(cover.window->point(p), cover.window->metric()));
            blocks.push_back(std::move(jb));
        }
        je["blocks"] = std::move(blocks);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

ColoredCover cover_from_json(const Json& j) {
    auto w = window_from_json(j.at("window"));
    int sup_level = w->metric() == Metric::sup ? w->level(0) : 0;
    PointCover pc;
    for (const Json& je : j.at("entries")) {
        pc.radii.push_back(je.at("radius").get<Dist>());
        std::vector<std::vector<Point>> fam;
        for (const Json& jb : je.at("blocks")) {
            std::vector<Point> block;
            for (const Json& pj : jb) block.push_back(point_from_json(pj, sup_level));
            fam.push_back(std::move(block));
        }
        pc.blocks.push_back(std::move(fam));
    }
    BindResult bound = bind_cover(pc, w);
    if (!bound.ok()) {
        std::string msg = "cover contains points outside the window:";
        for (std::size_t i = 0; i < bound.alien_points.size() && i < 5; ++i) {
            msg += " ";
            msg += point_to_json(bound.alien_points[i], w->metric()).dump();
        }
        throw std::invalid_argument(msg);
    }
    return bound.cover;
}

Json instance_to_json(const DecisionInstance& inst) {
    Json j;
    j["window"] = window_to_json(*inst.window);
    j["radii"] = inst.radii;
    j["diam"] = inst.diam;
    return j;
}

DecisionInstance instance_from_json(const Json& j) {
    DecisionInstance inst;
    inst.window = window_from_json(j.at("window"));
    inst.radii = j.at("radii").get<std::vector<Dist>>();
    inst.diam = j.at("diam").get<Dist>();
    return inst;
}

Json certificate_to_json(const Certificate& cert, const DecisionInstance& inst) {
    Json j;
    j["instance"] = instance_to_json(inst);
    j["hash"] = cert.hash;
    j["verdict"] = verdict_name(cert.verdict);
    j["stats"] = {{"nodes", cert.stats.nodes}, {"prunes", cert.stats.prunes}};
    j["config"] = cert.config;
    j["decided_by"] = cert.decided_by;
    if (cert.witness) j["witness"] = cover_to_json(*cert.witness);
    return j;
}

Json system_to_json(const ExplicitSystem& m) {
    Json j;
    j["universe"] = m.universe();
    Json members = Json::array();
    for (const LabelSet& mem : m.members()) members.push_back(mem);
    j["members"] = std::move(members);
    return j;
}

ExplicitSystem system_from_json(const Json& j) {
    LabelSet universe = j.at("universe").get<LabelSet>();
    std::set<LabelSet> members;
    for (const Json& mj : j.at("members")) {
        LabelSet m = mj.get<LabelSet>();
        std::sort(m.begin(), m.end());
        members.insert(std::move(m));
    }
    std::sort(universe.begin(), universe.end());
    return ExplicitSystem(std::move(universe), std::move(members));
}

std::string canonical_dump(const Json& j) { return j.dump(); }

} // namespace trasdim
