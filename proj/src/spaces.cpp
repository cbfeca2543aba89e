#include "trasdim/spaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace trasdim {

std::string family_name(SpaceFamily f) {
    switch (f) {
    case SpaceFamily::zn: return "zn";
    case SpaceFamily::kzn: return "kzn";
    case SpaceFamily::lomega: return "lomega";
    case SpaceFamily::linf: return "linf";
    }
    return {};
}

std::optional<SpaceFamily> family_from_name(std::string_view name) {
    if (name == "zn") return SpaceFamily::zn;
    if (name == "kzn") return SpaceFamily::kzn;
    if (name == "lomega") return SpaceFamily::lomega;
    if (name == "linf") return SpaceFamily::linf;
    return std::nullopt;
}

Dist sup_dist(std::span<const Coord> a, std::span<const Coord> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("sup_dist: coordinate length mismatch");
    Dist d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max<Dist>(d, std::abs(Dist(a[i]) - Dist(b[i])));
    return d;
}

Dist level_gap(std::int32_t l, std::int32_t k) {
    if (l > k) std::swap(l, k);
    // l + (l+1) + ... + (k-1)
    Dist lo = l, hi = k - 1;
    if (lo > hi) return 0;
    return (lo + hi) * (hi - lo + 1) / 2;
}

Dist tower_dist(const Point& a, const Point& b) {
    if (a.level < 1 || b.level < 1)
        throw std::invalid_argument("tower_dist: levels must be >= 1");
    const Point& lo = a.level <= b.level ? a : b;
    const Point& hi = a.level <= b.level ? b : a;
    Dist d = 0;
    for (std::size_t i = 0; i < hi.coords.size(); ++i) {
        Coord ai = i < lo.coords.size() ? lo.coords[i] : 0;
        d = std::max<Dist>(d, std::abs(Dist(ai) - Dist(hi.coords[i])));
    }
    return std::max(d, level_gap(lo.level, hi.level));
}

namespace {

void enumerate_lattice(int dims, Coord step, Coord side, std::int32_t level,
                       std::vector<Point>& out) {
    // coordinates are the multiples of step inside [-side, side], ascending
    std::vector<Coord> values;
    for (Coord v = -(side / step) * step; v <= side; v += step) values.push_back(v);
    if (values.empty()) return;
    std::vector<std::size_t> idx(dims, 0);
    Point p;
    p.level = level;
    p.coords.assign(dims, 0);
    for (;;) {
        for (int d = 0; d < dims; ++d) p.coords[d] = values[idx[d]];
        out.push_back(p);
        int d = dims - 1;
        while (d >= 0 && ++idx[d] == values.size()) idx[d--] = 0;
        if (d < 0) break;
    }
}

std::size_t lattice_count(int dims, Coord step, Coord side) {
    std::size_t per_axis = std::size_t(side / step) * 2 + 1;
    std::size_t total = 1;
    for (int d = 0; d < dims; ++d) {
        if (total > kMaxWindowPoints / per_axis + 1) return kMaxWindowPoints + 1;
        total *= per_axis;
    }
    return total;
}

} // namespace

std::shared_ptr<const Window> Window::make(const WindowSpec& spec) {
    if (spec.side < 0) throw std::invalid_argument("window side must be >= 0");
    std::vector<Point> points;
    std::vector<LevelInfo> info;
    auto add_level = [&](int dims, Coord step, std::int32_t level) {
        LevelInfo li;
        li.level = level;
        li.step = step;
        li.m = spec.side / step;
        li.base = points.size();
        li.count = lattice_count(dims, step, spec.side);
        if (li.base + li.count > kMaxWindowPoints) throw std::invalid_argument("window too large");
        enumerate_lattice(dims, step, spec.side, level, points);
        info.push_back(li);
    };
    switch (spec.family) {
    case SpaceFamily::zn:
        if (spec.dims < 1 || spec.dims > kMaxDims)
            throw std::invalid_argument("zn dims out of range");
        add_level(spec.dims, 1, spec.dims);
        break;
    case SpaceFamily::kzn:
        if (spec.dims < 1 || spec.dims > kMaxDims)
            throw std::invalid_argument("kzn dims out of range");
        if (spec.scale < 1) throw std::invalid_argument("kzn scale must be >= 1");
        add_level(spec.dims, spec.scale, spec.dims);
        break;
    case SpaceFamily::lomega:
    case SpaceFamily::linf:
        if (spec.level_cap < 1 || spec.level_cap > kMaxDims)
            throw std::invalid_argument("level cap out of range");
        for (int k = 1; k <= spec.level_cap; ++k)
            add_level(k, spec.family == SpaceFamily::lomega ? Coord(k) : 1, k);
        break;
    }
    if (points.empty()) throw std::invalid_argument("window spec produces no points");

    auto w = std::shared_ptr<Window>(new Window());
    w->metric_ =
        (spec.family == SpaceFamily::zn || spec.family == SpaceFamily::kzn) ? Metric::sup
                                                                            : Metric::dinf;
    w->spec_ = spec;
    w->level_info_ = std::move(info);
    int pad = 1;
    for (const Point& p : points) pad = std::max<int>(pad, p.level);
    w->pad_dims_ = pad;
    w->levels_.reserve(points.size());
    w->coords_.reserve(points.size() * pad);
    for (const Point& p : points) {
        w->levels_.push_back(p.level);
        for (int d = 0; d < pad; ++d)
            w->coords_.push_back(d < int(p.coords.size()) ? p.coords[d] : 0);
    }
    w->finalize();
    return w;
}

std::shared_ptr<const Window> Window::from_points(Metric metric, std::vector<Point> points) {
    if (points.empty()) throw std::invalid_argument("window needs at least one point");
    for (const Point& p : points) {
        if (p.level < 1 || p.level > kMaxDims || int(p.coords.size()) != p.level)
            throw std::invalid_argument("point level must match coordinate count");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (metric == Metric::sup) {
        for (const Point& p : points)
            if (p.level != points[0].level)
                throw std::invalid_argument("sup-metric window requires uniform dimension");
    }
    auto w = std::shared_ptr<Window>(new Window());
    w->metric_ = metric;
    int pad = 1;
    for (const Point& p : points) pad = std::max<int>(pad, p.level);
    w->pad_dims_ = pad;
    for (const Point& p : points) {
        w->levels_.push_back(p.level);
        for (int d = 0; d < pad; ++d)
            w->coords_.push_back(d < int(p.coords.size()) ? p.coords[d] : 0);
    }
    w->finalize();
    return w;
}

void Window::finalize() {
    uniform_level_ = true;
    for (std::int32_t l : levels_)
        if (l != levels_[0]) { uniform_level_ = false; break; }
    // cache the full matrix for small windows; larger ones compute on demand
    constexpr std::size_t kMatrixCap = 2048;
    if (size() <= kMatrixCap) {
        matrix_.assign(size() * size(), 0);
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j) {
                Dist d = 0;
                const Coord* a = coords_.data() + i * pad_dims_;
                const Coord* b = coords_.data() + j * pad_dims_;
                for (int k = 0; k < pad_dims_; ++k)
                    d = std::max<Dist>(d, std::abs(Dist(a[k]) - Dist(b[k])));
                d = std::max(d, level_gap(levels_[i], levels_[j]));
                matrix_[i * size() + j] = matrix_[j * size() + i] = std::int32_t(d);
            }
    }
}

Point Window::point(PointIndex i) const {
    Point p;
    p.level = levels_[i];
    auto c = padded(i);
    p.coords.assign(c.begin(), c.begin() + p.level);
    return p;
}

Dist Window::distance(PointIndex i, PointIndex j) const {
    if (!matrix_.empty()) return matrix_[std::size_t(i) * size() + j];
    const Coord* a = coords_.data() + std::size_t(i) * pad_dims_;
    const Coord* b = coords_.data() + std::size_t(j) * pad_dims_;
    Dist d = 0;
    for (int k = 0; k < pad_dims_; ++k)
        d = std::max<Dist>(d, std::abs(Dist(a[k]) - Dist(b[k])));
    return std::max(d, level_gap(levels_[i], levels_[j]));
}

Dist Window::diameter() const {
    BoxAgg box;
    for (PointIndex i = 0; i < size(); ++i) box.add(*this, i);
    return box.diameter(pad_dims_);
}

Coord Window::max_abs_coord() const {
    Coord m = 0;
    for (Coord c : coords_) m = std::max(m, Coord(std::abs(c)));
    return m;
}

std::optional<PointIndex> Window::lattice_index(std::int32_t level,
                                                std::span<const Coord> coords) const {
    for (const LevelInfo& li : level_info_) {
        if (li.level != level) continue;
        std::size_t idx = 0;
        std::size_t radix = std::size_t(li.m) * 2 + 1;
        for (std::int32_t d = 0; d < level; ++d) {
            Coord c = coords[d];
            if (c % li.step != 0) return std::nullopt;
            Coord digit = c / li.step + li.m;
            if (digit < 0 || std::size_t(digit) >= radix) return std::nullopt;
            idx = idx * radix + std::size_t(digit);
        }
        return PointIndex(li.base + idx);
    }
    return std::nullopt;
}

std::optional<PointIndex> Window::index_of(const Point& p) const {
    if (int(p.coords.size()) != p.level) return std::nullopt;
    if (!level_info_.empty()) return lattice_index(p.level, p.coords);
    // points are stored in canonical sorted order, so binary search works
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        // compare (level, coords) against the stored padded row
        std::int32_t lvl = levels_[mid];
        int c = lvl < p.level ? -1 : lvl > p.level ? 1 : 0;
        if (c == 0) {
            const Coord* row = coords_.data() + mid * pad_dims_;
            for (std::int32_t d = 0; d < p.level && c == 0; ++d)
                c = row[d] < p.coords[d] ? -1 : row[d] > p.coords[d] ? 1 : 0;
        }
        if (c == 0) return PointIndex(mid);
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

std::vector<PointIndex> neighborhood(std::span<const PointIndex> a, Dist R, const Window& w) {
    std::vector<PointIndex> out;
    for (PointIndex i = 0; i < w.size(); ++i) {
        for (PointIndex p : a) {
            if (w.distance(i, p) <= R) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

SetMetrics set_metrics(std::span<const PointIndex> a, std::span<const PointIndex> b,
                       const Window& w) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("set_metrics: empty input set");
    SetMetrics m;
    m.distance = -1;
    for (PointIndex x : a)
        for (PointIndex y : b) {
            Dist d = w.distance(x, y);
            if (m.distance < 0 || d < m.distance) m.distance = d;
        }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            m.diam_a = std::max(m.diam_a, w.distance(a[i], a[j]));
    return m;
}

void BoxAgg::add(const Window& w, PointIndex p) {
    auto c = w.padded(p);
    std::int32_t lvl = w.level(p);
    if (empty) {
        for (std::size_t d = 0; d < c.size(); ++d) lo[d] = hi[d] = c[d];
        level_lo = level_hi = lvl;
        empty = false;
        return;
    }
    for (std::size_t d = 0; d < c.size(); ++d) {
        lo[d] = std::min(lo[d], c[d]);
        hi[d] = std::max(hi[d], c[d]);
    }
    level_lo = std::min(level_lo, lvl);
    level_hi = std::max(level_hi, lvl);
}

void BoxAgg::merge(const BoxAgg& o, int dims) {
    if (o.empty) return;
    if (empty) {
        *this = o;
        return;
    }
    for (int d = 0; d < dims; ++d) {
        lo[d] = std::min(lo[d], o.lo[d]);
        hi[d] = std::max(hi[d], o.hi[d]);
    }
    level_lo = std::min(level_lo, o.level_lo);
    level_hi = std::max(level_hi, o.level_hi);
}

Dist BoxAgg::diameter(int dims) const {
    if (empty) return 0;
    Dist d = 0;
    for (int k = 0; k < dims; ++k) d = std::max<Dist>(d, Dist(hi[k]) - Dist(lo[k]));
    return std::max(d, level_gap(level_lo, level_hi));
}

} // namespace trasdim
