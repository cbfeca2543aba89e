#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "trasdim/ordinal.hpp"
#include "trasdim/solver.hpp"
#include "trasdim/spaces.hpp"

namespace trasdim {

// sorted, distinct labels
using LabelSet = std::vector<std::uint32_t>;

LabelSet label_union(const LabelSet& a, const LabelSet& b);
bool labels_disjoint(const LabelSet& a, const LabelSet& b);

// Explicit finite subset of Fin L: a set of non-empty label sets over a
// finite universe.
class ExplicitSystem {
public:
    ExplicitSystem() = default;
    // Throws if a member is empty or leaves the universe, or if
    // require_inclusive is set and some non-empty subset of a member is
    // missing.
    ExplicitSystem(LabelSet universe, std::set<LabelSet> members, bool require_inclusive = false);

    const LabelSet& universe() const { return universe_; }
    const std::set<LabelSet>& members() const { return members_; }
    bool contains(const LabelSet& sigma) const { return members_.count(sigma) > 0; }
    bool empty() const { return members_.empty(); }
    bool is_inclusive() const;

    // members extending sigma disjointly, with sigma removed;
    // derivative of the empty set is the system itself
    ExplicitSystem derivative(const LabelSet& sigma) const;

private:
    LabelSet universe_;
    std::set<LabelSet> members_;
};

// Ord by the raw recursion (0 on the empty system, otherwise one past the
// largest derivative), memoized on the sorted derivative index. Finite
// universes always terminate with a finite value.
Ordinal ord_of_system(const ExplicitSystem& m);

// Fast path: Ord of an explicit finite system equals its largest member
// cardinality. Kept separate so tests can cross-check the recursion.
std::uint64_t max_member_cardinality(const ExplicitSystem& m);

enum class Membership { in_a, not_in_a, unknown };

// Finite truncation of the obstruction system of a window: sigma (a set of
// radii drawn from 1..r_max) is a member exactly when no cover of the
// window with sigma-disjoint families of diameter <= D exists. Solver
// verdicts decide membership; unknown verdicts stay unknown.
class TruncatedA {
public:
    TruncatedA(std::shared_ptr<const Window> window, Dist D, std::uint32_t r_max,
               SolverOptions opts = {});

    Membership membership(const LabelSet& sigma) const;

    std::shared_ptr<const Window> window() const { return window_; }
    Dist diam() const { return diam_; }
    std::uint32_t r_max() const { return r_max_; }

private:
    std::shared_ptr<const Window> window_;
    Dist diam_;
    std::uint32_t r_max_;
    SolverOptions opts_;
    mutable std::map<LabelSet, Membership> memo_;
};

struct OrdInterval {
    Ordinal lower;
    Ordinal upper;
    bool exact() const { return lower == upper; }
};

// Ord of the truncated system by the raw recursion over all label sets.
// Unknown memberships widen the result to an interval instead of guessing.
OrdInterval ord_truncated_A(const TruncatedA& ta);

// Fast path via inclusivity and radius monotonicity: the largest k whose
// top radius set {r_max-k+1..r_max} is a member. Must agree with the raw
// recursion when everything is decided.
OrdInterval largest_member_cardinality(const TruncatedA& ta);

} // namespace trasdim
