#include "trasdim/borst.hpp"

#include <algorithm>
#include <stdexcept>

namespace trasdim {

LabelSet label_union(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool labels_disjoint(const LabelSet& a, const LabelSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

namespace {

bool is_sorted_distinct(const LabelSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

bool subset_of(const LabelSet& a, const LabelSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

ExplicitSystem::ExplicitSystem(LabelSet universe, std::set<LabelSet> members,
                               bool require_inclusive)
    : universe_(std::move(universe)), members_(std::move(members)) {
    if (!is_sorted_distinct(universe_))
        throw std::invalid_argument("universe must be sorted and distinct");
    for (const LabelSet& m : members_) {
        if (m.empty()) throw std::invalid_argument("set system members must be non-empty");
        if (!is_sorted_distinct(m) || !subset_of(m, universe_))
            throw std::invalid_argument("member is not a sorted subset of the universe");
    }
    if (require_inclusive && !is_inclusive())
        throw std::invalid_argument("set system is not inclusive");
}

bool ExplicitSystem::is_inclusive() const {
    for (const LabelSet& m : members_) {
        // drop one element at a time; closure under that implies closure
        // under all non-empty subsets
        if (m.size() < 2) continue;
        for (std::size_t i = 0; i < m.size(); ++i) {
            LabelSet sub;
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != i) sub.push_back(m[j]);
            if (!members_.count(sub)) return false;
        }
    }
    return true;
}

ExplicitSystem ExplicitSystem::derivative(const LabelSet& sigma) const {
    if (sigma.empty()) return *this;
    if (!is_sorted_distinct(sigma)) throw std::invalid_argument("sigma must be sorted and distinct");
    std::set<LabelSet> out;
    for (const LabelSet& m : members_) {
        if (!subset_of(sigma, m)) continue;
        LabelSet tau;
        std::set_difference(m.begin(), m.end(), sigma.begin(), sigma.end(),
                            std::back_inserter(tau));
        if (!tau.empty()) out.insert(std::move(tau));
    }
    return ExplicitSystem(universe_, std::move(out));
}

namespace {

std::uint64_t ord_rec(const ExplicitSystem& m, const LabelSet& sigma,
                      std::map<LabelSet, std::uint64_t>& memo) {
    auto it = memo.find(sigma);
    if (it != memo.end()) return it->second;
    // the sigma-derivative is non-empty iff some member strictly extends sigma
    bool nonempty = false;
    for (const LabelSet& mem : m.members())
        if (mem.size() > sigma.size() && subset_of(sigma, mem)) {
            nonempty = true;
            break;
        }
    std::uint64_t val = 0;
    if (nonempty) {
        std::uint64_t best = 0;
        for (std::uint32_t a : m.universe()) {
            if (std::binary_search(sigma.begin(), sigma.end(), a)) continue;
            LabelSet next = label_union(sigma, {a});
            best = std::max(best, ord_rec(m, next, memo));
        }
        val = best + 1;
    }
    memo[sigma] = val;
    return val;
}

} // namespace

Ordinal ord_of_system(const ExplicitSystem& m) {
    if (m.empty()) return Ordinal::nat(0);
    std::map<LabelSet, std::uint64_t> memo;
    return Ordinal::nat(ord_rec(m, {}, memo));
}

std::uint64_t max_member_cardinality(const ExplicitSystem& m) {
    std::uint64_t best = 0;
    for (const LabelSet& mem : m.members()) best = std::max<std::uint64_t>(best, mem.size());
    return best;
}

TruncatedA::TruncatedA(std::shared_ptr<const Window> window, Dist D, std::uint32_t r_max,
                       SolverOptions opts)
    : window_(std::move(window)), diam_(D), r_max_(r_max), opts_(opts) {
    if (!window_ || window_->size() == 0)
        throw std::invalid_argument("truncated system needs a non-empty window");
    if (r_max_ < 1 || r_max_ > 16) throw std::invalid_argument("r_max out of range");
    if (diam_ < 0) throw std::invalid_argument("diameter bound must be >= 0");
}

Membership TruncatedA::membership(const LabelSet& sigma) const {
    if (sigma.empty()) throw std::invalid_argument("membership of the empty set is undefined");
    for (std::uint32_t v : sigma)
        if (v < 1 || v > r_max_) throw std::invalid_argument("label outside 1..r_max");
    auto it = memo_.find(sigma);
    if (it != memo_.end()) return it->second;

    DecisionInstance inst;
    inst.window = window_;
    inst.radii.assign(sigma.begin(), sigma.end());
    inst.diam = diam_;
    Certificate cert = decide_cover(inst, opts_);
    Membership m = cert.verdict == Verdict::unsat  ? Membership::in_a
                   : cert.verdict == Verdict::sat ? Membership::not_in_a
                                                  : Membership::unknown;
    memo_[sigma] = m;
    return m;
}

namespace {

// Resolve unknowns one way and take Ord of the resulting explicit system.
Ordinal resolved_ord(const TruncatedA& ta, bool optimistic) {
    LabelSet universe;
    for (std::uint32_t v = 1; v <= ta.r_max(); ++v) universe.push_back(v);
    std::set<LabelSet> members;
    std::uint32_t full = (1u << ta.r_max()) - 1;
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
        LabelSet sigma;
        for (std::uint32_t v = 0; v < ta.r_max(); ++v)
            if (bits & (1u << v)) sigma.push_back(v + 1);
        Membership m = ta.membership(sigma);
        if (m == Membership::in_a || (optimistic && m == Membership::unknown))
            members.insert(std::move(sigma));
    }
    return ord_of_system(ExplicitSystem(std::move(universe), std::move(members)));
}

} // namespace

OrdInterval ord_truncated_A(const TruncatedA& ta) {
    OrdInterval out;
    out.lower = resolved_ord(ta, false);
    out.upper = resolved_ord(ta, true);
    return out;
}

OrdInterval largest_member_cardinality(const TruncatedA& ta) {
    // every size-k member is pointwise <= the top radius set of size k, and
    // raising a radius preserves membership, so it is enough to test tops
    Ordinal lower = Ordinal::nat(0);
    Ordinal upper = Ordinal::nat(0);
    bool lower_done = false, upper_done = false;
    for (std::uint32_t k = ta.r_max(); k >= 1 && !(lower_done && upper_done); --k) {
        LabelSet top;
        for (std::uint32_t v = ta.r_max() - k + 1; v <= ta.r_max(); ++v) top.push_back(v);
        Membership m = ta.membership(top);
        if (!upper_done && (m == Membership::in_a || m == Membership::unknown)) {
            upper = Ordinal::nat(k);
            upper_done = true;
        }
        if (!lower_done && m == Membership::in_a) {
            lower = Ordinal::nat(k);
            lower_done = true;
        }
    }
    return {lower, upper};
}

} // namespace trasdim
