#pragma once

#include <optional>
#include <string>
#include <vector>

#include "joingeo/axioms.hpp"
#include "joingeo/check_report.hpp"
#include "joingeo/closure.hpp"
#include "joingeo/join_space.hpp"

namespace joingeo {

/// Exchange property of a closure system: for every closed A and x, y
/// outside A, y in cl(A + {x}) implies x in cl(A + {y}).
/// Witness: (x, y, A) at the first violation in scan order (closed sets
/// ascending, then x, then y).
inline CheckReport check_exchange(const ClosureSystem& cs) {
    const int n = cs.point_count();
    for (const PointSet& A : cs.closed_sets()) {
        std::vector<PointSet> ext(n);
        for (int x = 0; x < n; ++x)
            if (!A.contains(x)) ext[x] = cs.closure(A | PointSet::single(x));
        for (int x = 0; x < n; ++x) {
            if (A.contains(x)) continue;
            for (int y = 0; y < n; ++y) {
                if (A.contains(y) || y == x) continue;
                if (ext[x].contains(y) && !ext[y].contains(x)) {
                    Witness w;
                    w.points = {x, y};
                    w.sets = {A};
                    w.note = "y in cl(A+x) but x not in cl(A+y)";
                    return CheckReport::fail("exchange", std::move(w));
                }
            }
        }
    }
    return CheckReport::pass("exchange");
}

/// Exchange property of a join space, over the family of all join-closed
/// sets (enumeration capped by `enum_bound`).
inline CheckReport check_exchange(const JoinSpace& s, int enum_bound = kDefaultClosedEnumBound) {
    return check_exchange(all_join_closed(s, enum_bound));
}

/// A finite space is a matroid exactly when it has the exchange property:
/// the chain-union condition is automatic for finite families, since the
/// union of a finite chain is its largest element.
inline CheckReport check_matroid(const ClosureSystem& cs) {
    CheckReport r = check_exchange(cs);
    r.label = "matroid";
    return r;
}

inline CheckReport check_matroid(const JoinSpace& s, int enum_bound = kDefaultClosedEnumBound) {
    return check_matroid(all_join_closed(s, enum_bound));
}

/// Greedy rank of a join space. `rank` counts the points adjoined (smallest
/// index outside the running closure each step) until the closure reaches
/// the ground set; `dimension` is rank - 1. The value is well defined for
/// matroids; otherwise it may depend on the adjunction order and `matroid`
/// reports false so callers can warn.
struct RankResult {
    int rank = 0;
    int dimension = -1;
    bool matroid = false;
    std::optional<Witness> matroid_witness;
};

inline RankResult matroid_rank(const JoinSpace& s, int enum_bound = kDefaultClosedEnumBound) {
    RankResult out;
    CheckReport m = check_matroid(s, enum_bound);
    out.matroid = m.ok;
    out.matroid_witness = std::move(m.witness);

    PointSet ground = s.points();
    PointSet basis;
    PointSet cl = join_closure(s, basis);
    while (cl != ground) {
        int next = (ground - cl).first();
        basis.add(next);
        cl = join_closure(s, basis);
        ++out.rank;
    }
    out.dimension = out.rank - 1;
    return out;
}

/// Result of the entailment-reversal check: on a join-transitive space, the
/// relative entailment over a nonempty join-closed base A is the reverse of
/// the relation <A,.,.>, i.e. y in jc(A + {x}) iff y in Ax for all x, y.
/// The base must be nonempty: over the empty closed set the entailment
/// relation is the identity on X while <0,.,.> is empty, so the reversal
/// identity holds only for nonempty bases.
struct EntailmentReversal {
    bool hypothesis_met = false;
    std::optional<Witness> hypothesis_witness;
    CheckReport check;
};

inline EntailmentReversal entailment_reverse_check(const JoinSpace& s,
                                                   int enum_bound = kDefaultClosedEnumBound) {
    EntailmentReversal out;
    CheckReport hyp = check_join_transitive(s);
    out.hypothesis_met = hyp.ok;
    if (!hyp.ok) {
        out.hypothesis_witness = std::move(hyp.witness);
        out.check = CheckReport::fail("entailment-reversal", Witness{{}, {}, "hypothesis not met"});
        return out;
    }

    const int n = s.point_count();
    ClosureSystem closed = all_join_closed(s, enum_bound);
    for (const PointSet& A : closed.closed_sets()) {
        if (A.empty()) continue;
        for (int x = 0; x < n; ++x) {
            PointSet left = join_closure(s, A | PointSet::single(x));
            PointSet right = s.set_join(A, x);
            if (left != right) {
                PointSet diff = (left - right) | (right - left);
                Witness w;
                w.points = {x, diff.first()};
                w.sets = {A, left, right};
                w.note = "jc(A+x) != Ax";
                out.check = CheckReport::fail("entailment-reversal", std::move(w));
                return out;
            }
        }
    }
    out.check = CheckReport::pass("entailment-reversal");
    return out;
}

/// Four-way matroid criterion, stated for join-transitive spaces:
///   (1) symmetric;
///   (2) join-equivalence-relational;
///   (3) exchange space;
///   (4) matroid.
inline ConditionVector matroid_criterion(const JoinSpace& s, int enum_bound = kDefaultClosedEnumBound) {
    ConditionVector vec;
    vec.label = "matroid-criterion";

    CheckReport hyp = check_join_transitive(s);
    vec.hypothesis_met = hyp.ok;
    if (!hyp.ok) {
        vec.hypothesis_witness = std::move(hyp.witness);
        return vec;
    }

    {
        CheckReport r = check_symmetric(s);
        vec.conditions.push_back({1, r.ok, std::move(r.witness)});
    }
    {
        CheckReport r = check_join_equivalence_relational(s);
        vec.conditions.push_back({2, r.ok, std::move(r.witness)});
    }
    ClosureSystem closed = all_join_closed(s, enum_bound);
    {
        CheckReport r = check_exchange(closed);
        vec.conditions.push_back({3, r.ok, std::move(r.witness)});
    }
    {
        CheckReport r = check_matroid(closed);
        vec.conditions.push_back({4, r.ok, std::move(r.witness)});
    }
    return vec;
}

}  // namespace joingeo
