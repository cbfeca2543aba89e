#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trasdim/spaces.hpp"

namespace trasdim {

// A block is a sorted list of point indices into a specific window.
using Block = std::vector<PointIndex>;

struct Family {
    std::vector<Block> blocks;
};

struct CoverEntry {
    Dist radius = 1;
    Family family;
};

// Colored cover of a window: per entry one family that must be
// radius-disjoint, with the union of all families covering every point.
struct ColoredCover {
    std::shared_ptr<const Window> window;
    std::vector<CoverEntry> entries;
};

// Same structure with explicit points, the wire form. Binding to a window
// resolves points to indices and flags anything outside the window.
struct PointCover {
    std::vector<Dist> radii;
    std::vector<std::vector<std::vector<Point>>> blocks; // per entry, per block
};

struct BindResult {
    ColoredCover cover;
    std::vector<Point> alien_points; // points not present in the window
    bool ok() const { return alien_points.empty(); }
};

BindResult bind_cover(const PointCover& pc, std::shared_ptr<const Window> w);
PointCover unbind_cover(const ColoredCover& c);

struct ValidationReport {
    bool covers_window = false;
    bool families_disjoint = false;
    bool diameters_bounded = false;
    bool radii_positive = false;
    std::size_t uncovered_points = 0;
    Dist max_block_diameter = 0;
    std::vector<std::string> issues;

    bool accepted() const {
        return covers_window && families_disjoint && diameters_bounded && radii_positive;
    }
};

bool is_r_disjoint(const Family& f, Dist r, const Window& w);

// Checks coverage, per-family r-disjointness and the diameter bound D,
// each independently; accepted() iff all hold.
ValidationReport validate_cover(const ColoredCover& cover, Dist D);

// Each block replaced by its closed m-neighborhood inside the ambient
// window. Blocks of f index into `source`; the result indexes into
// `ambient`. An (r+2m)-disjoint family expands to an r-disjoint one and
// block diameters grow by at most 2m.
Family expand_family(const Family& f, const Window& source, Dist m, const Window& ambient);

ColoredCover expand_cover(const ColoredCover& cover, Dist m,
                          std::shared_ptr<const Window> ambient);

// Constructive witness for asdim Z^n <= n on a lattice window: n+1 families
// of shifted shrunk grid cubes, each r-disjoint, block diameter < (n+1)(r+1).
ColoredCover build_zn_cover(int n, Dist r, std::shared_ptr<const Window> w);

// Tower-window cover with families of radii tau[0..n-1] and one n-disjoint
// family: the level-<=n part is covered by a lattice cover built on the
// level-n sublattice at inflated disjointness and expanded by the measured
// containment radius; all higher-level points become singleton blocks of the
// last family. Witnesses that tau + {n} admits a cover at the achieved
// diameter. Requires |tau| == n, n not in tau, level cap > n.
ColoredCover build_lomega_cover(std::vector<Dist> tau, int n, std::shared_ptr<const Window> w);

// Max over levels <= n of the distance to the level-n part of w; the
// expansion radius used by build_lomega_cover.
Dist lomega_containment_radius(int n, const Window& w);

// Blocks intersected with a sub-window; empty blocks dropped. Every point
// of `sub` must exist in the cover's window.
ColoredCover restrict_cover(const ColoredCover& cover, std::shared_ptr<const Window> sub);

Dist max_block_diameter(const ColoredCover& cover);

// Deterministic form: block contents sorted, blocks ordered by first index.
void canonicalize(ColoredCover& cover);

} // namespace trasdim
