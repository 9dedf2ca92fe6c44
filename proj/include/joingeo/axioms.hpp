#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "joingeo/check_report.hpp"
#include "joingeo/closure.hpp"
#include "joingeo/join_space.hpp"

namespace joingeo {

/// Uniform random subset of {0..n-1}. Consumes one rng draw per started
/// 64-bit word, so streams are reproducible across platforms.
inline PointSet random_subset(std::mt19937_64& rng, int n) {
    PointSet s = PointSet::from_mask(rng());
    if (n > 64) {
        std::uint64_t hi = rng();
        for (int k = 0; k + 64 < n; ++k)
            if ((hi >> k) & 1u) s.add(64 + k);
    }
    return s & PointSet::full(n);
}

/// X is A-transitive: for every b, A(Ab) is contained in Ab. Witness on
/// failure: (b, x) with x in A(Ab) but not in Ab, smallest b first, then
/// smallest x.
inline CheckReport check_a_transitive(const JoinSpace& s, const PointSet& A) {
    const int n = s.point_count();
    for (int b = 0; b < n; ++b) {
        PointSet Ab = s.set_join(A, b);
        PointSet AAb = s.set_join(A, Ab);
        PointSet extra = AAb - Ab;
        if (!extra.empty()) {
            Witness w;
            w.points = {b, extra.first()};
            w.sets = {A};
            w.note = "x in A(Ab) but not in Ab";
            return CheckReport::fail("a-transitive", std::move(w));
        }
    }
    return CheckReport::pass("a-transitive");
}

/// Same property through the other route: the binary relation
/// R(u, v) := u in Av is transitive on all of X. Must agree with
/// check_a_transitive on every input.
inline CheckReport check_a_transitive_by_relation(const JoinSpace& s, const PointSet& A) {
    const int n = s.point_count();
    std::vector<PointSet> Av(n);
    for (int v = 0; v < n; ++v) Av[v] = s.set_join(A, v);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!Av[y].contains(x)) continue;
            for (int z = 0; z < n; ++z)
                if (Av[z].contains(y) && !Av[z].contains(x)) {
                    Witness w;
                    w.points = {x, y, z};
                    w.sets = {A};
                    w.note = "x in Ay, y in Az, x not in Az";
                    return CheckReport::fail("a-transitive", std::move(w));
                }
        }
    return CheckReport::pass("a-transitive");
}

/// X is A-symmetric: c in Ab with c outside A implies b in Ac.
/// Witness: (b, c) in scan order.
inline CheckReport check_a_symmetric(const JoinSpace& s, const PointSet& A) {
    const int n = s.point_count();
    std::vector<PointSet> Av(n);
    for (int v = 0; v < n; ++v) Av[v] = s.set_join(A, v);
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            if (!Av[b].contains(c) || A.contains(c)) continue;
            if (!Av[c].contains(b)) {
                Witness w;
                w.points = {b, c};
                w.sets = {A};
                w.note = "c in Ab, c outside A, b not in Ac";
                return CheckReport::fail("a-symmetric", std::move(w));
            }
        }
    return CheckReport::pass("a-symmetric");
}

/// Conjunction of A-transitive and A-symmetric.
inline CheckReport check_a_equivalence_relational(const JoinSpace& s, const PointSet& A) {
    CheckReport t = check_a_transitive(s, A);
    if (!t.ok) return CheckReport::fail("a-equivalence-relational", std::move(*t.witness));
    CheckReport sym = check_a_symmetric(s, A);
    if (!sym.ok) return CheckReport::fail("a-equivalence-relational", std::move(*sym.witness));
    return CheckReport::pass("a-equivalence-relational");
}

namespace detail {

/// Lifts a per-base check to the quantifier over all singleton bases,
/// prefixing the base point to the witness.
template <typename PerBase>
inline CheckReport for_each_point_base(const JoinSpace& s, const std::string& label, PerBase&& per_base) {
    for (int a = 0; a < s.point_count(); ++a) {
        CheckReport r = per_base(PointSet::single(a));
        if (!r.ok) {
            Witness w = std::move(*r.witness);
            w.points.insert(w.points.begin(), a);
            return CheckReport::fail(label, std::move(w));
        }
    }
    return CheckReport::pass(label);
}

/// Lifts a per-base check to the quantifier over all pair joins ab,
/// including the diagonal joins aa = {a}.
template <typename PerBase>
inline CheckReport for_each_pair_join_base(const JoinSpace& s, const std::string& label, PerBase&& per_base) {
    const int n = s.point_count();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            CheckReport r = per_base(s.join(a, b));
            if (!r.ok) {
                Witness w = std::move(*r.witness);
                w.points.insert(w.points.begin(), {a, b});
                return CheckReport::fail(label, std::move(w));
            }
        }
    return CheckReport::pass(label);
}

}  // namespace detail

/// X is transitive: a-transitive for every point a.
inline CheckReport check_transitive(const JoinSpace& s) {
    return detail::for_each_point_base(s, "transitive",
                                       [&](const PointSet& A) { return check_a_transitive(s, A); });
}

/// X is symmetric: a-symmetric for every point a.
inline CheckReport check_symmetric(const JoinSpace& s) {
    return detail::for_each_point_base(s, "symmetric",
                                       [&](const PointSet& A) { return check_a_symmetric(s, A); });
}

/// X is equivalence-relational: transitive and symmetric.
inline CheckReport check_equivalence_relational(const JoinSpace& s) {
    return detail::for_each_point_base(
        s, "equivalence-relational",
        [&](const PointSet& A) { return check_a_equivalence_relational(s, A); });
}

/// X is join-transitive: ab-transitive for every pair join ab (diagonals
/// included).
inline CheckReport check_join_transitive(const JoinSpace& s) {
    return detail::for_each_pair_join_base(s, "join-transitive",
                                           [&](const PointSet& A) { return check_a_transitive(s, A); });
}

/// X is join-equivalence-relational: ab-equivalence-relational for every
/// pair join ab.
inline CheckReport check_join_equivalence_relational(const JoinSpace& s) {
    return detail::for_each_pair_join_base(
        s, "join-equivalence-relational",
        [&](const PointSet& A) { return check_a_equivalence_relational(s, A); });
}

/// Pasch-style crossing axiom on joins: if bc meets ad (or b = c or a = d),
/// then ab meets cd (or a = b or c = d). Witness: (a, b, c, d).
inline CheckReport check_pasch(const JoinSpace& s) {
    const int n = s.point_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    bool hyp = b == c || a == d || s.join(b, c).intersects(s.join(a, d));
                    if (!hyp) continue;
                    bool concl = a == b || c == d || s.join(a, b).intersects(s.join(c, d));
                    if (!concl) {
                        Witness w;
                        w.points = {a, b, c, d};
                        w.note = "bc meets ad but ab misses cd";
                        return CheckReport::fail("pasch", std::move(w));
                    }
                }
    return CheckReport::pass("pasch");
}

/// X is dense: every join of two distinct points has a third point.
inline CheckReport check_dense(const JoinSpace& s) {
    const int n = s.point_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (s.join(a, b).count() < 3) {
                Witness w;
                w.points = {a, b};
                w.sets = {s.join(a, b)};
                w.note = "join has no third point";
                return CheckReport::fail("dense", std::move(w));
            }
    return CheckReport::pass("dense");
}

/// X is preprojective: equivalence-relational and pasch.
inline CheckReport check_preprojective(const JoinSpace& s) {
    CheckReport er = check_equivalence_relational(s);
    if (!er.ok) {
        Witness w = std::move(*er.witness);
        w.note = "not equivalence-relational: " + w.note;
        return CheckReport::fail("preprojective", std::move(w));
    }
    CheckReport p = check_pasch(s);
    if (!p.ok) return CheckReport::fail("preprojective", std::move(*p.witness));
    return CheckReport::pass("preprojective");
}

/// X is projective: preprojective and dense.
inline CheckReport check_projective(const JoinSpace& s) {
    CheckReport pre = check_preprojective(s);
    if (!pre.ok) return CheckReport::fail("projective", std::move(*pre.witness));
    CheckReport d = check_dense(s);
    if (!d.ok) return CheckReport::fail("projective", std::move(*d.witness));
    return CheckReport::pass("projective");
}

/// X is proper: every pair join is join-closed.
inline CheckReport check_proper(const JoinSpace& s) {
    const int n = s.point_count();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            PointSet j = s.join(a, b);
            if (!is_join_closed(s, j)) {
                Witness w;
                w.points = {a, b, (s.set_join(j, j) - j).first()};
                w.sets = {j};
                w.note = "pair join is not join-closed";
                return CheckReport::fail("proper", std::move(w));
            }
        }
    return CheckReport::pass("proper");
}

/// Evaluation knobs for the criterion vectors. Power-set conditions are
/// evaluated exactly when n <= exact_subset_bound (hard cap 8) and by seeded
/// random subsets otherwise; closed-set conditions enumerate all join-closed
/// sets and are capped by closed_enum_bound.
struct ThmOptions {
    int exact_subset_bound = 4;
    int closed_enum_bound = kDefaultClosedEnumBound;
    int sample_rounds = 512;
    std::uint64_t seed = 1;
};

inline constexpr int kMaxExactSubsetBound = 8;

namespace detail {

/// Associativity and commutativity of the set join on the power set,
/// evaluated exactly over all subsets for small n.
inline void semigroup_conditions_exact(const JoinSpace& s, Condition& assoc, Condition& comm) {
    const int n = s.point_count();
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<PointSet> table(size * size);
    for (std::uint64_t x = 0; x < size; ++x)
        for (std::uint64_t y = x; y < size; ++y) {
            PointSet v = s.set_join(PointSet::from_mask(x), PointSet::from_mask(y));
            table[x * size + y] = v;
            table[y * size + x] = s.set_join(PointSet::from_mask(y), PointSet::from_mask(x));
        }
    comm.holds = true;
    for (std::uint64_t x = 0; x < size && comm.holds; ++x)
        for (std::uint64_t y = x + 1; y < size; ++y)
            if (table[x * size + y] != table[y * size + x]) {
                Witness w;
                w.sets = {PointSet::from_mask(x), PointSet::from_mask(y)};
                w.note = "AB != BA";
                comm = {comm.id, false, std::move(w)};
                break;
            }
    assoc.holds = true;
    for (std::uint64_t x = 0; x < size && assoc.holds; ++x)
        for (std::uint64_t y = 0; y < size && assoc.holds; ++y)
            for (std::uint64_t z = 0; z < size; ++z) {
                PointSet lhs = table[table[x * size + y].to_mask() * size + z];
                PointSet rhs = table[x * size + table[y * size + z].to_mask()];
                if (lhs != rhs) {
                    Witness w;
                    w.sets = {PointSet::from_mask(x), PointSet::from_mask(y), PointSet::from_mask(z)};
                    w.note = "(AB)C != A(BC)";
                    assoc = {assoc.id, false, std::move(w)};
                    break;
                }
            }
    comm.holds = comm.holds && assoc.holds;
    if (!comm.holds && !comm.witness && assoc.witness) comm.witness = assoc.witness;
}

/// Same two conditions probed by seeded random subset triples.
inline void semigroup_conditions_sampled(const JoinSpace& s, Condition& assoc, Condition& comm,
                                         const ThmOptions& opts) {
    const int n = s.point_count();
    std::mt19937_64 rng(opts.seed);
    std::string tag = "sampled (seed=" + std::to_string(opts.seed) + ")";
    assoc.holds = true;
    comm.holds = true;
    for (int round = 0; round < opts.sample_rounds; ++round) {
        PointSet A = random_subset(rng, n);
        PointSet B = random_subset(rng, n);
        PointSet C = random_subset(rng, n);
        if (assoc.holds && s.set_join(s.set_join(A, B), C) != s.set_join(A, s.set_join(B, C))) {
            Witness w;
            w.sets = {A, B, C};
            w.note = "(AB)C != A(BC), " + tag;
            assoc = {assoc.id, false, std::move(w)};
        }
        if (comm.holds && s.set_join(A, B) != s.set_join(B, A)) {
            Witness w;
            w.sets = {A, B};
            w.note = "AB != BA, " + tag;
            comm = {comm.id, false, std::move(w)};
        }
    }
    comm.holds = comm.holds && assoc.holds;
    if (!comm.holds && !comm.witness && assoc.witness) comm.witness = assoc.witness;
}

}  // namespace detail

/// Nine-way join-transitivity criterion. The claim under test is that all
/// nine conditions carry the same truth value on any join space:
///   (1) join-transitive;
///   (2) a(bc) contained in (ab)c for all points;
///   (3) a(bc) = (ab)c for all points;
///   (4) the set join makes the power set a semigroup;
///   (5) ... a commutative semigroup;
///   (6) proper, and <A,.,.> transitive for every join-closed A;
///   (7) AC join-closed for all join-closed A, C;
///   (8) (ab)c join-closed for all points;
///   (9) jc({a,b,c}) = (ab)c for all points.
inline ConditionVector join_transitivity_criterion(const JoinSpace& s, const ThmOptions& opts = {}) {
    const int n = s.point_count();
    ConditionVector vec;
    vec.label = "join-transitivity-criterion";

    {
        CheckReport r = check_join_transitive(s);
        vec.conditions.push_back({1, r.ok, std::move(r.witness)});
    }

    {
        Condition incl{2, true, std::nullopt};
        Condition eq{3, true, std::nullopt};
        for (int a = 0; a < n && (incl.holds || eq.holds); ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    PointSet lhs = s.set_join(a, s.join(b, c));
                    PointSet rhs = s.set_join(s.join(a, b), c);
                    if (incl.holds && !lhs.subset_of(rhs)) {
                        Witness w;
                        w.points = {a, b, c, (lhs - rhs).first()};
                        w.note = "a(bc) escapes (ab)c";
                        incl = {2, false, std::move(w)};
                    }
                    if (eq.holds && lhs != rhs) {
                        PointSet diff = lhs == rhs ? PointSet() : ((lhs - rhs) | (rhs - lhs));
                        Witness w;
                        w.points = {a, b, c, diff.first()};
                        w.note = "a(bc) != (ab)c";
                        eq = {3, false, std::move(w)};
                    }
                }
        vec.conditions.push_back(std::move(incl));
        vec.conditions.push_back(std::move(eq));
    }

    {
        Condition assoc{4, true, std::nullopt};
        Condition comm{5, true, std::nullopt};
        if (n <= opts.exact_subset_bound) {
            if (n > kMaxExactSubsetBound)
                throw ResourceError("join_transitivity_criterion: exact power-set evaluation capped at n <= " +
                                    std::to_string(kMaxExactSubsetBound));
            detail::semigroup_conditions_exact(s, assoc, comm);
        } else {
            detail::semigroup_conditions_sampled(s, assoc, comm, opts);
        }
        vec.conditions.push_back(std::move(assoc));
        vec.conditions.push_back(std::move(comm));
    }

    ClosureSystem closed = all_join_closed(s, opts.closed_enum_bound);

    {
        Condition cond{6, true, std::nullopt};
        CheckReport proper = check_proper(s);
        if (!proper.ok) {
            cond = {6, false, std::move(proper.witness)};
        } else {
            for (const PointSet& A : closed.closed_sets()) {
                CheckReport r = check_a_transitive(s, A);
                if (!r.ok) {
                    cond = {6, false, std::move(r.witness)};
                    break;
                }
            }
        }
        vec.conditions.push_back(std::move(cond));
    }

    {
        Condition cond{7, true, std::nullopt};
        for (const PointSet& A : closed.closed_sets()) {
            for (const PointSet& C : closed.closed_sets()) {
                PointSet AC = s.set_join(A, C);
                if (!is_join_closed(s, AC)) {
                    Witness w;
                    w.sets = {A, C, AC};
                    w.note = "AC is not join-closed";
                    cond = {7, false, std::move(w)};
                    break;
                }
            }
            if (!cond.holds) break;
        }
        vec.conditions.push_back(std::move(cond));
    }

    {
        Condition c8{8, true, std::nullopt};
        Condition c9{9, true, std::nullopt};
        for (int a = 0; a < n && (c8.holds || c9.holds); ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    PointSet abc = s.set_join(s.join(a, b), c);
                    if (c8.holds && !is_join_closed(s, abc)) {
                        Witness w;
                        w.points = {a, b, c};
                        w.sets = {abc};
                        w.note = "(ab)c is not join-closed";
                        c8 = {8, false, std::move(w)};
                    }
                    if (c9.holds) {
                        PointSet jc = join_closure(s, PointSet::of({a, b, c}));
                        if (jc != abc) {
                            Witness w;
                            w.points = {a, b, c};
                            w.sets = {jc, abc};
                            w.note = "jc({a,b,c}) != (ab)c";
                            c9 = {9, false, std::move(w)};
                        }
                    }
                }
        vec.conditions.push_back(std::move(c8));
        vec.conditions.push_back(std::move(c9));
    }

    return vec;
}

/// Five-way join-equivalence-relationality criterion, stated for
/// equivalence-relational spaces:
///   (1) join-equivalence-relational;
///   (2) join-transitive;
///   (3) a(bc) contained in (ab)c for all points;
///   (4) (c,b,a,d) dependent implies (a,b,c,d) dependent;
///   (5) preprojective.
inline ConditionVector join_equivalence_criterion(const JoinSpace& s) {
    const int n = s.point_count();
    ConditionVector vec;
    vec.label = "join-equivalence-criterion";

    CheckReport hyp = check_equivalence_relational(s);
    vec.hypothesis_met = hyp.ok;
    if (!hyp.ok) {
        vec.hypothesis_witness = std::move(hyp.witness);
        return vec;
    }

    {
        CheckReport r = check_join_equivalence_relational(s);
        vec.conditions.push_back({1, r.ok, std::move(r.witness)});
    }
    {
        CheckReport r = check_join_transitive(s);
        vec.conditions.push_back({2, r.ok, std::move(r.witness)});
    }
    {
        Condition cond{3, true, std::nullopt};
        for (int a = 0; a < n && cond.holds; ++a)
            for (int b = 0; b < n && cond.holds; ++b)
                for (int c = 0; c < n; ++c) {
                    PointSet lhs = s.set_join(a, s.join(b, c));
                    PointSet rhs = s.set_join(s.join(a, b), c);
                    if (!lhs.subset_of(rhs)) {
                        Witness w;
                        w.points = {a, b, c, (lhs - rhs).first()};
                        w.note = "a(bc) escapes (ab)c";
                        cond = {3, false, std::move(w)};
                        break;
                    }
                }
        vec.conditions.push_back(std::move(cond));
    }
    {
        Condition cond{4, true, std::nullopt};
        for (int a = 0; a < n && cond.holds; ++a)
            for (int b = 0; b < n && cond.holds; ++b)
                for (int c = 0; c < n && cond.holds; ++c)
                    for (int d = 0; d < n; ++d)
                        if (dependent(s, c, b, a, d) && !dependent(s, a, b, c, d)) {
                            Witness w;
                            w.points = {a, b, c, d};
                            w.note = "(c,b,a,d) dependent, (a,b,c,d) not";
                            cond = {4, false, std::move(w)};
                            break;
                        }
        vec.conditions.push_back(std::move(cond));
    }
    {
        CheckReport r = check_preprojective(s);
        vec.conditions.push_back({5, r.ok, std::move(r.witness)});
    }

    return vec;
}

}  // namespace joingeo
