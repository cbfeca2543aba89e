#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trasdim {

// Coordinates stay below a few hundred in every supported window, so all
// distances fit comfortably in int64 without overflow anywhere.
using Coord = std::int32_t;
using Dist = std::int64_t;
using PointIndex = std::uint32_t;

// Hard caps for window enumeration. Desk-scale computations never get close
// to overflowing these; they guard against accidental huge requests.
inline constexpr int kMaxDims = 8;
inline constexpr std::size_t kMaxWindowPoints = 40'000'000;

enum class SpaceFamily { zn, kzn, lomega, linf };
enum class Metric { sup, dinf };

std::string family_name(SpaceFamily f);
std::optional<SpaceFamily> family_from_name(std::string_view name);

// A point of one of the example spaces. For lattice families the level is
// just the dimension; for tower families it is the index of the lattice the
// point lives in and always equals coords.size().
struct Point {
    std::int32_t level = 1;
    std::vector<Coord> coords;

    bool operator==(const Point&) const = default;
    // level-major, then lexicographic by coords; the canonical window order
    bool operator<(const Point& o) const {
        if (level != o.level) return level < o.level;
        return coords < o.coords;
    }
};

struct WindowSpec {
    SpaceFamily family = SpaceFamily::zn;
    int dims = 1;      // zn/kzn
    int scale = 1;     // kzn: the k of (kZ)^n
    Coord side = 0;    // points with sup-norm <= side
    int level_cap = 1; // lomega/linf

    bool operator==(const WindowSpec&) const = default;
};

Dist sup_dist(std::span<const Coord> a, std::span<const Coord> b);
Dist tower_dist(const Point& a, const Point& b);

// c = l + (l+1) + ... + (k-1) between levels l <= k, 0 on equal levels.
Dist level_gap(std::int32_t l, std::int32_t k);

// Finite point set with an exact integer metric. Points are stored in
// canonical sorted order (level-major, then lex), padded with zeros to a
// common coordinate width; distances are exact and symmetric.
class Window {
public:
    // Per-level product-lattice structure of spec-built windows: level k
    // holds every point with coordinates in step*[-m, m]^k, stored as one
    // contiguous block in mixed-radix order. Empty for from_points windows.
    struct LevelInfo {
        std::int32_t level = 1;
        Coord step = 1;
        Coord m = 0; // coordinate values are step * [-m, m]
        std::size_t base = 0;
        std::size_t count = 0;
    };

    static std::shared_ptr<const Window> make(const WindowSpec& spec);
    static std::shared_ptr<const Window> from_points(Metric metric, std::vector<Point> points);

    std::size_t size() const { return levels_.size(); }
    int pad_dims() const { return pad_dims_; }
    Metric metric() const { return metric_; }
    const std::optional<WindowSpec>& spec() const { return spec_; }

    std::int32_t level(PointIndex i) const { return levels_[i]; }
    std::span<const Coord> padded(PointIndex i) const {
        return {coords_.data() + std::size_t(i) * pad_dims_, std::size_t(pad_dims_)};
    }
    Point point(PointIndex i) const;

    Dist distance(PointIndex i, PointIndex j) const;
    Dist diameter() const;
    Coord max_abs_coord() const;

    std::optional<PointIndex> index_of(const Point& p) const;

    // true when every point sits on the same level (plain lattice windows)
    bool uniform_level() const { return uniform_level_; }

    std::span<const LevelInfo> level_blocks() const { return level_info_; }

private:
    Window() = default;
    void finalize();
    std::optional<PointIndex> lattice_index(std::int32_t level, std::span<const Coord> coords) const;

    Metric metric_ = Metric::sup;
    std::optional<WindowSpec> spec_;
    int pad_dims_ = 1;
    bool uniform_level_ = true;
    std::vector<std::int32_t> levels_;
    std::vector<Coord> coords_; // size() * pad_dims_, zero padded
    std::vector<std::int32_t> matrix_; // full distance matrix for small windows
    std::vector<LevelInfo> level_info_;
};

// All points of w within distance <= R of the set A; sorted indices.
std::vector<PointIndex> neighborhood(std::span<const PointIndex> a, Dist R, const Window& w);

struct SetMetrics {
    Dist distance = 0; // min pairwise distance between A and B
    Dist diam_a = 0;   // max pairwise distance within A
};

// Rejects empty inputs.
SetMetrics set_metrics(std::span<const PointIndex> a, std::span<const PointIndex> b,
                       const Window& w);

// Exact mergeable diameter summary of a point set: for these metrics the
// diameter of a set equals max(coordinate extent on padded coords,
// level_gap(min level, max level)), so a bounding box plus the level range
// determines it.
struct BoxAgg {
    std::array<Coord, kMaxDims> lo{};
    std::array<Coord, kMaxDims> hi{};
    std::int32_t level_lo = 0;
    std::int32_t level_hi = 0;
    bool empty = true;

    void add(const Window& w, PointIndex p);
    void merge(const BoxAgg& o, int dims);
    Dist diameter(int dims) const;
};

} // namespace trasdim
