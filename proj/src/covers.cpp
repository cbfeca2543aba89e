#include "trasdim/covers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "trasdim/util.hpp"

namespace trasdim {

namespace {

BoxAgg block_box(const Block& b, const Window& w) {
    BoxAgg box;
    for (PointIndex p : b) box.add(w, p);
    return box;
}

// Lower bound for the set distance between two blocks from their boxes:
// every pair distance is >= each coordinate gap and >= the smallest level
// gap the level ranges allow.
Dist box_distance_lower(const BoxAgg& a, const BoxAgg& b, int dims) {
    Dist d = 0;
    for (int k = 0; k < dims; ++k) {
        Dist gap = std::max<Dist>(Dist(b.lo[k]) - Dist(a.hi[k]), Dist(a.lo[k]) - Dist(b.hi[k]));
        d = std::max(d, gap);
    }
    Dist cgap = 0;
    if (a.level_hi < b.level_lo) cgap = level_gap(a.level_hi, b.level_lo);
    if (b.level_hi < a.level_lo) cgap = level_gap(b.level_hi, a.level_lo);
    return std::max(d, cgap);
}

bool blocks_at_least(const Block& a, const Block& b, Dist r, const Window& w) {
    for (PointIndex x : a)
        for (PointIndex y : b)
            if (w.distance(x, y) < r) return false;
    return true;
}

} // namespace

bool is_r_disjoint(const Family& f, Dist r, const Window& w) {
    std::vector<BoxAgg> boxes;
    boxes.reserve(f.blocks.size());
    for (const Block& b : f.blocks) boxes.push_back(block_box(b, w));
    int dims = w.pad_dims();
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < f.blocks.size(); ++j) {
            if (box_distance_lower(boxes[i], boxes[j], dims) >= r) continue;
            if (!blocks_at_least(f.blocks[i], f.blocks[j], r, w)) return false;
        }
    return true;
}

ValidationReport validate_cover(const ColoredCover& cover, Dist D) {
    const Window& w = *cover.window;
    ValidationReport rep;

    rep.radii_positive = true;
    for (const CoverEntry& e : cover.entries)
        if (e.radius < 1) {
            rep.radii_positive = false;
            rep.issues.push_back("entry radius < 1");
        }

    std::vector<char> covered(w.size(), 0);
    for (const CoverEntry& e : cover.entries)
        for (const Block& b : e.family.blocks)
            for (PointIndex p : b) covered[p] = 1;
    for (char c : covered)
        if (!c) ++rep.uncovered_points;
    rep.covers_window = rep.uncovered_points == 0;
    if (!rep.covers_window)
        rep.issues.push_back(std::to_string(rep.uncovered_points) + " window point(s) uncovered");

    rep.families_disjoint = true;
    for (std::size_t i = 0; i < cover.entries.size(); ++i) {
        const CoverEntry& e = cover.entries[i];
        for (const Block& b : e.family.blocks)
            if (b.empty()) {
                rep.families_disjoint = false;
                rep.issues.push_back("empty block in family " + std::to_string(i));
            }
        if (!is_r_disjoint(e.family, e.radius, w)) {
            rep.families_disjoint = false;
            rep.issues.push_back("family " + std::to_string(i) + " is not " +
                                 std::to_string(e.radius) + "-disjoint");
        }
    }

    rep.diameters_bounded = true;
    for (std::size_t i = 0; i < cover.entries.size(); ++i)
        for (const Block& b : cover.entries[i].family.blocks) {
            Dist d = block_box(b, w).diameter(w.pad_dims());
            rep.max_block_diameter = std::max(rep.max_block_diameter, d);
            if (d > D) {
                rep.diameters_bounded = false;
                rep.issues.push_back("block of diameter " + std::to_string(d) + " in family " +
                                     std::to_string(i) + " exceeds " + std::to_string(D));
            }
        }

    return rep;
}

BindResult bind_cover(const PointCover& pc, std::shared_ptr<const Window> w) {
    BindResult res;
    res.cover.window = w;
    if (pc.radii.size() != pc.blocks.size())
        throw std::invalid_argument("bind_cover: radii/blocks length mismatch");
    for (std::size_t i = 0; i < pc.radii.size(); ++i) {
        CoverEntry e;
        e.radius = pc.radii[i];
        for (const auto& pts : pc.blocks[i]) {
            Block b;
            for (const Point& p : pts) {
                auto idx = w->index_of(p);
                if (!idx) {
                    res.alien_points.push_back(p);
                    continue;
                }
                b.push_back(*idx);
            }
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            e.family.blocks.push_back(std::move(b));
        }
        res.cover.entries.push_back(std::move(e));
    }
    canonicalize(res.cover);
    return res;
}

PointCover unbind_cover(const ColoredCover& c) {
    PointCover pc;
    for (const CoverEntry& e : c.entries) {
        pc.radii.push_back(e.radius);
        std::vector<std::vector<Point>> fam;
        for (const Block& b : e.family.blocks) {
            std::vector<Point> pts;
            pts.reserve(b.size());
            for (PointIndex p : b) pts.push_back(c.window->point(p));
            fam.push_back(std::move(pts));
        }
        pc.blocks.push_back(std::move(fam));
    }
    return pc;
}

Family expand_family(const Family& f, const Window& source, Dist m, const Window& ambient) {
    Family out;
    out.blocks.reserve(f.blocks.size());
    for (const Block& b : f.blocks) {
        Block nb;
        for (PointIndex q = 0; q < ambient.size(); ++q) {
            Point qp = ambient.point(q);
            for (PointIndex p : b) {
                Dist d = tower_dist(source.point(p), qp);
                if (d <= m) {
                    nb.push_back(q);
                    break;
                }
            }
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

ColoredCover expand_cover(const ColoredCover& cover, Dist m,
                          std::shared_ptr<const Window> ambient) {
    ColoredCover out;
    out.window = ambient;
    for (const CoverEntry& e : cover.entries) {
        CoverEntry ne;
        ne.radius = e.radius;
        ne.family = expand_family(e.family, *cover.window, m, *ambient);
        out.entries.push_back(std::move(ne));
    }
    canonicalize(out);
    return out;
}

namespace {

// Shifted shrunk grids over an n-dimensional lattice point set.
//
// Cube side L = (n+1)(r+1); family j uses the grid of side-L cubes shifted
// by j(r+1) in every coordinate and keeps only points at least ceil(r/2)
// from the cube walls. Same-family cores are then >= 2*ceil(r/2)+1 > r
// apart, and per coordinate at most one shift class puts a point in the
// margin (consecutive offsets differ by r+1 while the margin band is only
// 2*ceil(r/2) <= r+1 wide), so over n coordinates at most n of the n+1
// classes can miss it.
std::vector<Family> zn_families(const std::vector<PointIndex>& pts, const Window& w, int n,
                                Dist r) {
    Dist L = Dist(n + 1) * (r + 1);
    Dist margin = (r + 1) / 2; // ceil(r/2)
    std::vector<Family> fams(n + 1);
    for (int j = 0; j <= n; ++j) {
        std::map<std::vector<std::int64_t>, Block> buckets;
        Dist off = Dist(j) * (r + 1);
        for (PointIndex p : pts) {
            auto c = w.padded(p);
            std::vector<std::int64_t> cell(n);
            bool core = true;
            for (int d = 0; d < n; ++d) {
                std::int64_t v = Dist(c[d]) + off;
                std::int64_t rem = floor_mod(v, L);
                if (rem < margin || rem > L - 1 - margin) {
                    core = false;
                    break;
                }
                cell[d] = floor_div(v, L);
            }
            if (core) buckets[cell].push_back(p);
        }
        for (auto& [cell, block] : buckets) fams[j].blocks.push_back(std::move(block));
    }
    return fams;
}

} // namespace

ColoredCover build_zn_cover(int n, Dist r, std::shared_ptr<const Window> w) {
    if (r < 1) throw std::invalid_argument("build_zn_cover: r must be >= 1");
    if (w->metric() != Metric::sup || !w->uniform_level())
        throw std::invalid_argument("build_zn_cover: lattice window required");
    if (w->level(0) != n)
        throw std::invalid_argument("build_zn_cover: window dimension mismatch");
    std::vector<PointIndex> all(w->size());
    for (PointIndex i = 0; i < w->size(); ++i) all[i] = i;
    auto fams = zn_families(all, *w, n, r);
    ColoredCover cover;
    cover.window = w;
    for (auto& f : fams) cover.entries.push_back({r, std::move(f)});
    canonicalize(cover);
    return cover;
}

Dist lomega_containment_radius(int n, const Window& w) {
    std::vector<PointIndex> level_n;
    for (PointIndex i = 0; i < w.size(); ++i)
        if (w.level(i) == n) level_n.push_back(i);
    if (level_n.empty()) throw std::invalid_argument("window has no level-n points");
    Dist radius = 0;
    for (PointIndex i = 0; i < w.size(); ++i) {
        if (w.level(i) > n) continue;
        Dist best = -1;
        for (PointIndex q : level_n) {
            Dist d = w.distance(i, q);
            if (best < 0 || d < best) best = d;
        }
        radius = std::max(radius, best);
    }
    return radius;
}

ColoredCover build_lomega_cover(std::vector<Dist> tau, int n, std::shared_ptr<const Window> w) {
    if (n < 1) throw std::invalid_argument("build_lomega_cover: n must be >= 1");
    if (int(tau.size()) != n)
        throw std::invalid_argument("build_lomega_cover: |tau| must equal n");
    std::sort(tau.begin(), tau.end());
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (tau[i] < 1) throw std::invalid_argument("build_lomega_cover: tau values must be >= 1");
        if (tau[i] == Dist(n)) throw std::invalid_argument("build_lomega_cover: n must not be in tau");
        if (i > 0 && tau[i] == tau[i - 1])
            throw std::invalid_argument("build_lomega_cover: tau values must be distinct");
    }
    if (!w->spec() || w->spec()->family != SpaceFamily::lomega)
        throw std::invalid_argument("build_lomega_cover: lomega window required");
    if (w->spec()->level_cap <= n)
        throw std::invalid_argument("build_lomega_cover: level cap must exceed n");

    Dist c_eff = lomega_containment_radius(n, *w);
    Dist r_base = std::max<Dist>(tau.back(), n) + 2 * c_eff;

    std::vector<PointIndex> level_n;
    for (PointIndex i = 0; i < w->size(); ++i)
        if (w->level(i) == n) level_n.push_back(i);
    auto fams = zn_families(level_n, *w, n, r_base);

    // expand by the containment radius so the whole level-<=n part is covered
    if (c_eff > 0) {
        for (auto& f : fams) {
            Family ex;
            for (const Block& b : f.blocks) {
                Block nb;
                for (PointIndex q = 0; q < w->size(); ++q) {
                    for (PointIndex p : b)
                        if (w->distance(p, q) <= c_eff) {
                            nb.push_back(q);
                            break;
                        }
                }
                ex.blocks.push_back(std::move(nb));
            }
            f = std::move(ex);
        }
    }

    ColoredCover cover;
    cover.window = w;
    for (int i = 0; i < n; ++i) cover.entries.push_back({tau[i], std::move(fams[i])});
    CoverEntry last;
    last.radius = n;
    last.family = std::move(fams[n]);
    for (PointIndex i = 0; i < w->size(); ++i)
        if (w->level(i) > n) last.family.blocks.push_back({i});
    cover.entries.push_back(std::move(last));
    canonicalize(cover);
    return cover;
}

ColoredCover restrict_cover(const ColoredCover& cover, std::shared_ptr<const Window> sub) {
    const Window& parent = *cover.window;
    // map parent indices to sub indices
    std::vector<std::int64_t> to_sub(parent.size(), -1);
    for (PointIndex i = 0; i < sub->size(); ++i) {
        auto idx = parent.index_of(sub->point(i));
        if (!idx) throw std::invalid_argument("restrict_cover: sub-window point not in window");
        to_sub[*idx] = i;
    }
    ColoredCover out;
    out.window = sub;
    for (const CoverEntry& e : cover.entries) {
        CoverEntry ne;
        ne.radius = e.radius;
        for (const Block& b : e.family.blocks) {
            Block nb;
            for (PointIndex p : b)
                if (to_sub[p] >= 0) nb.push_back(PointIndex(to_sub[p]));
            if (!nb.empty()) ne.family.blocks.push_back(std::move(nb));
        }
        out.entries.push_back(std::move(ne));
    }
    canonicalize(out);
    return out;
}

Dist max_block_diameter(const ColoredCover& cover) {
    Dist d = 0;
    for (const CoverEntry& e : cover.entries)
        for (const Block& b : e.family.blocks)
            d = std::max(d, block_box(b, *cover.window).diameter(cover.window->pad_dims()));
    return d;
}

void canonicalize(ColoredCover& cover) {
    for (CoverEntry& e : cover.entries) {
        for (Block& b : e.family.blocks) std::sort(b.begin(), b.end());
        std::sort(e.family.blocks.begin(), e.family.blocks.end());
    }
}

} // namespace trasdim
