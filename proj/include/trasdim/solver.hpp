#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trasdim/covers.hpp"
#include "trasdim/spaces.hpp"

namespace trasdim {

class ResultCache;

enum class Verdict { sat, unsat, unknown };

std::string verdict_name(Verdict v);

struct DecisionInstance {
    std::shared_ptr<const Window> window;
    std::vector<Dist> radii; // one per family, each >= 1; repeats allowed
    Dist diam = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
};

struct Certificate {
    Verdict verdict = Verdict::unknown;
    std::optional<ColoredCover> witness; // sat only; always passes validate_cover
    SearchStats stats;
    std::string hash;       // content digest of the canonical instance form
    std::string config;     // solver configuration id
    std::string decided_by; // cache | greedy | presolve | search
};

struct SolverOptions {
    std::uint64_t node_budget = 100'000'000;
    // canonical: static point order, witness from the lexicographically first
    // valid coloring. fast: most-constrained ordering plus a greedy probe;
    // same verdict, any valid witness.
    bool canonical = false;
    // try to certify unsat on smaller sub-windows first; sound because a
    // cover of the window restricts to a cover of any sub-window
    bool presolve = true;
    ResultCache* cache = nullptr;
};

// Decides whether the window splits into radii.size() families, family i
// being radii[i]-disjoint with all block diameters <= diam.
//
// Reduction: a cover exists iff there is a coloring of the points with one
// color per family such that for every color i each connected component of
// the graph on color-i points with edges {x,y : d(x,y) < r_i} has diameter
// <= diam. Any valid cover induces such a coloring (pick one covering family
// per point: a chain of <r_i steps cannot cross between blocks >= r_i
// apart, so every component stays inside one block), and conversely the
// components themselves are pairwise >= r_i apart by maximality and form a
// valid cover. The search is complete backtracking over colorings.
Certificate decide_cover(const DecisionInstance& inst, const SolverOptions& opts = {});

// Exhaustive enumeration of all colorings, checked by direct pairwise
// distance computation; the independent oracle. Guarded by m^|W| <= 2^28.
Certificate brute_force_decide(const DecisionInstance& inst);

struct MinDiamResult {
    enum class Status { found, unknown, unsat_at_cap };
    Status status = Status::found;
    Dist value = 0;          // least D with a cover, when found
    Dist lower = 0, upper = 0; // remaining search interval when unknown
    std::uint64_t nodes = 0;
};

// Least D with decide_cover SAT via binary search on D (SAT is monotone in
// D). With a cap, reports unsat_at_cap instead of searching above it.
MinDiamResult min_diameter(std::shared_ptr<const Window> w, std::vector<Dist> radii,
                           const SolverOptions& opts = {}, std::optional<Dist> cap = {});

// Deterministic sequential heuristic; returns a validated cover or nothing.
// Never evidence of unsat.
std::optional<ColoredCover> greedy_upper(const DecisionInstance& inst);

std::string instance_hash(const DecisionInstance& inst);

// Blocks = connected components of each color class; canonical form.
ColoredCover cover_from_coloring(const DecisionInstance& inst,
                                 const std::vector<std::int8_t>& coloring);

std::optional<std::vector<std::int8_t>> coloring_from_cover(const ColoredCover& cover);

} // namespace trasdim
