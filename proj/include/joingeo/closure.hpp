#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "joingeo/check_report.hpp"
#include "joingeo/join_space.hpp"

namespace joingeo {

/// Default cap on ground-set size for operations that enumerate all 2^n
/// subsets (join-closed families and everything built on them).
inline constexpr int kDefaultClosedEnumBound = 14;

/// C is join-closed when CC is contained in C. The empty set qualifies.
inline bool is_join_closed(const JoinSpace& s, const PointSet& C) {
    return s.set_join(C, C).subset_of(C);
}

/// Least join-closed superset of A, computed as the fixpoint of
/// B -> B | BB. Terminates within n steps; jc(empty) = empty.
inline PointSet join_closure(const JoinSpace& s, PointSet A) {
    for (;;) {
        PointSet next = A | s.set_join(A, A);
        if (next == A) return A;
        A = next;
    }
}

/// A finite family of closed subsets of {0..n-1}, kept sorted in numeric
/// order with duplicates removed. The family is expected to contain the
/// ground set and be closed under intersection; validate_closure_system
/// checks exactly that, so invalid families can be represented for testing.
class ClosureSystem {
public:
    ClosureSystem(int n, std::vector<PointSet> closed) : n_(n), closed_(std::move(closed)) {
        if (n < 1 || n > kMaxPoints) throw std::invalid_argument("ClosureSystem: point count out of range");
        for (const PointSet& c : closed_)
            if (!c.within(n)) throw std::invalid_argument("ClosureSystem: closed set exceeds the ground set");
        std::sort(closed_.begin(), closed_.end());
        closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
    }

    int point_count() const { return n_; }
    const std::vector<PointSet>& closed_sets() const { return closed_; }

    bool is_closed(const PointSet& c) const {
        return std::binary_search(closed_.begin(), closed_.end(), c);
    }

    /// Intersection of all closed supersets of A. Requires at least one
    /// closed superset (guaranteed when the ground set is in the family).
    PointSet closure(const PointSet& A) const {
        PointSet acc;
        bool found = false;
        for (const PointSet& c : closed_) {
            if (!A.subset_of(c)) continue;
            if (!found) {
                acc = c;
                found = true;
            } else {
                acc &= c;
            }
        }
        if (!found) throw std::logic_error("ClosureSystem::closure: no closed superset (ground set missing)");
        return acc;
    }

private:
    int n_ = 0;
    std::vector<PointSet> closed_;
};

/// Checks the closure-system invariants: the ground set belongs to the
/// family and the family is closed under pairwise intersection (for a finite
/// family that gives closure under all nonempty intersections). The empty
/// set is allowed but not required.
inline CheckReport validate_closure_system(const ClosureSystem& cs) {
    const std::vector<PointSet>& closed = cs.closed_sets();
    PointSet ground = PointSet::full(cs.point_count());
    if (!cs.is_closed(ground)) {
        Witness w;
        w.sets.push_back(ground);
        w.note = "ground set not in the family";
        return CheckReport::fail("closure-system", std::move(w));
    }
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            PointSet meet = closed[i] & closed[j];
            if (!cs.is_closed(meet)) {
                Witness w;
                w.sets = {closed[i], closed[j], meet};
                w.note = "intersection escapes the family";
                return CheckReport::fail("closure-system", std::move(w));
            }
        }
    return CheckReport::pass("closure-system");
}

/// All join-closed subsets, in ascending numeric order. Enumerates the full
/// power set, so the ground size is capped.
inline ClosureSystem all_join_closed(const JoinSpace& s, int enum_bound = kDefaultClosedEnumBound) {
    const int n = s.point_count();
    if (enum_bound > 30) throw std::invalid_argument("all_join_closed: bound too large");
    if (n > enum_bound)
        throw ResourceError("all_join_closed: enumerating 2^" + std::to_string(n) +
                            " subsets exceeds the bound of n <= " + std::to_string(enum_bound));
    std::vector<PointSet> closed;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        PointSet c = PointSet::from_mask(mask);
        if (is_join_closed(s, c)) closed.push_back(c);
    }
    return ClosureSystem(n, std::move(closed));
}

/// Relative entailment: x entails y over the base set A when y lies in the
/// closure of A + {x}.
inline bool entails(const JoinSpace& s, const PointSet& A, int x, int y) {
    return join_closure(s, A | PointSet::single(x)).contains(y);
}

inline bool entails(const ClosureSystem& cs, const PointSet& A, int x, int y) {
    return cs.closure(A | PointSet::single(x)).contains(y);
}

}  // namespace joingeo
