#pragma once

// Test-only oracle: every validator check recomputed by straight pairwise
// distance loops, independent of the box-filtered production path.

#include "trasdim/covers.hpp"

namespace trasdim::oracle {

struct NaiveReport {
    bool coverage = true;
    bool disjoint = true;
    bool bounded = true;
    bool accepted() const { return coverage && disjoint && bounded; }
};

inline NaiveReport naive_validate(const ColoredCover& c, Dist D) {
    const Window& w = *c.window;
    NaiveReport rep;
    std::vector<char> covered(w.size(), 0);
    for (const auto& e : c.entries)
        for (const auto& b : e.family.blocks)
            for (auto p : b) covered[p] = 1;
    for (char x : covered)
        if (!x) rep.coverage = false;
    for (const auto& e : c.entries) {
        for (std::size_t i = 0; i < e.family.blocks.size(); ++i) {
            if (e.family.blocks[i].empty()) rep.disjoint = false;
            for (std::size_t j = i + 1; j < e.family.blocks.size(); ++j) {
                Dist dmin = -1;
                for (auto x : e.family.blocks[i])
                    for (auto y : e.family.blocks[j]) {
                        Dist d = w.distance(x, y);
                        if (dmin < 0 || d < dmin) dmin = d;
                    }
                if (dmin >= 0 && dmin < e.radius) rep.disjoint = false;
            }
        }
        for (const auto& b : e.family.blocks)
            for (std::size_t x = 0; x < b.size(); ++x)
                for (std::size_t y = x + 1; y < b.size(); ++y)
                    if (w.distance(b[x], b[y]) > D) rep.bounded = false;
    }
    return rep;
}

} // namespace trasdim::oracle
