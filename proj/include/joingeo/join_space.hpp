#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "joingeo/check_report.hpp"
#include "joingeo/point_set.hpp"

namespace joingeo {

inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Rank of the unordered pair {a, c} with a < c in lexicographic pair order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
inline constexpr int pair_rank(int n, int a, int c) {
    return a * (2 * n - a - 1) / 2 + (c - a - 1);
}

/// Raw ternary relation on points 0..n-1, stored per ordered pair:
/// at(a, c) = { b | <a, b, c> }. No axioms are assumed; see validate().
class TernaryRelation {
public:
    explicit TernaryRelation(int n) : n_(n) {
        if (n < 1 || n > kMaxPoints) throw std::invalid_argument("TernaryRelation: point count out of range");
        rel_.resize(static_cast<std::size_t>(n) * n);
    }

    int point_count() const { return n_; }

    PointSet at(int a, int c) const {
        check_index(a);
        check_index(c);
        return rel_[static_cast<std::size_t>(a) * n_ + c];
    }

    void set(int a, int c, const PointSet& members) {
        check_index(a);
        check_index(c);
        rel_[static_cast<std::size_t>(a) * n_ + c] = members;
    }

    bool holds(int a, int b, int c) const { return at(a, c).contains(b); }

private:
    void check_index(int p) const {
        if (p < 0 || p >= n_) throw std::out_of_range("TernaryRelation: point index out of range");
    }

    int n_ = 0;
    std::vector<PointSet> rel_;
};

/// One axiom violation found by validate(). `axiom` is one of
/// "endpoint-in-join" (a must lie in ac), "join-symmetry" (ac must be
/// contained in ca) and "diagonal-join" (aa must equal {a}); `member` is the
/// offending element where one exists.
struct AxiomViolation {
    std::string axiom;
    int a = 0;
    int c = 0;
    std::optional<int> member;

    std::string to_string() const {
        std::string out = axiom + " at (" + std::to_string(a) + ", " + std::to_string(c) + ")";
        if (member) out += ", element " + std::to_string(*member);
        return out;
    }
};

/// A validated join space on points 0..n-1. Stores one join per unordered
/// pair in pair_rank order; the diagonal join aa = {a} is implicit. The
/// constructor enforces the structural invariants (each pair join contains
/// both endpoints and fits the width), so every instance is a join space.
class JoinSpace {
public:
    JoinSpace(int n, std::vector<PointSet> pair_joins) : n_(n), joins_(std::move(pair_joins)) {
        if (n < 1 || n > kMaxPoints) throw std::invalid_argument("JoinSpace: point count out of range");
        if (static_cast<int>(joins_.size()) != pair_count(n))
            throw std::invalid_argument("JoinSpace: expected one join per unordered pair");
        for (int a = 0; a < n; ++a) {
            for (int c = a + 1; c < n; ++c) {
                const PointSet& j = joins_[pair_rank(n, a, c)];
                if (!j.within(n)) throw std::invalid_argument("JoinSpace: join member out of range");
                if (!j.contains(a) || !j.contains(c))
                    throw std::invalid_argument("JoinSpace: pair join must contain both endpoints");
            }
        }
    }

    int point_count() const { return n_; }

    /// The ground set {0, ..., n-1}.
    PointSet points() const { return PointSet::full(n_); }

    /// The join ac = { b | <a, b, c> }. For a == c this is {a}.
    PointSet join(int a, int c) const {
        check_index(a);
        check_index(c);
        if (a == c) return PointSet::single(a);
        if (a > c) std::swap(a, c);
        return joins_[pair_rank(n_, a, c)];
    }

    /// <a, b, c>, i.e. b lies in the join ac.
    bool ternary(int a, int b, int c) const { return join(a, c).contains(b); }

    /// The set join AC = union of ac over a in A, c in C. Empty when either
    /// argument is empty.
    PointSet set_join(const PointSet& A, const PointSet& C) const {
        check_subset(A);
        check_subset(C);
        PointSet out;
        for (int a : A)
            for (int c : C) out |= join(a, c);
        return out;
    }

    PointSet set_join(int a, const PointSet& C) const { return set_join(PointSet::single(a), C); }
    PointSet set_join(const PointSet& A, int c) const { return set_join(A, PointSet::single(c)); }

    /// The joins vector in pair_rank order; doubles as the canonical
    /// encoding of the space for ordering and equality.
    const std::vector<PointSet>& pair_joins() const { return joins_; }

    friend bool operator==(const JoinSpace&, const JoinSpace&) = default;

private:
    void check_index(int p) const {
        if (p < 0 || p >= n_) throw std::out_of_range("JoinSpace: point index out of range");
    }

    void check_subset(const PointSet& A) const {
        if (!A.within(n_)) throw std::invalid_argument("JoinSpace: subset exceeds the ground set");
    }

    int n_ = 0;
    std::vector<PointSet> joins_;
};

/// Result of validating a raw ternary relation. Exactly one of `space` /
/// `violations` is meaningful: a relation with no violations yields the
/// validated space.
struct ValidationResult {
    std::optional<JoinSpace> space;
    std::vector<AxiomViolation> violations;

    bool ok() const { return space.has_value(); }
};

/// Checks the three join-space axiom families on a raw relation:
/// a in ac for a != c, ac contained in ca for a != c, and aa = {a}.
/// Violations are reported per ordered pair in lexicographic scan order,
/// grouped by axiom. Width errors (members outside 0..n-1) are structural
/// misuse and throw instead of being reported as violations.
inline ValidationResult validate(const TernaryRelation& rel) {
    const int n = rel.point_count();
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            if (!rel.at(a, c).within(n))
                throw std::invalid_argument("validate: relation member out of range at (" + std::to_string(a) +
                                            ", " + std::to_string(c) + ")");

    ValidationResult result;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c) continue;
            if (!rel.at(a, c).contains(a)) result.violations.push_back({"endpoint-in-join", a, c, std::nullopt});
        }
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c) continue;
            PointSet extra = rel.at(a, c) - rel.at(c, a);
            if (!extra.empty()) result.violations.push_back({"join-symmetry", a, c, extra.first()});
        }
    for (int a = 0; a < n; ++a) {
        PointSet diag = rel.at(a, a);
        if (diag != PointSet::single(a)) {
            PointSet off = diag - PointSet::single(a);
            std::optional<int> member;
            if (!off.empty()) member = off.first();
            result.violations.push_back({"diagonal-join", a, a, member});
        }
    }
    if (!result.violations.empty()) return result;

    std::vector<PointSet> joins(pair_count(n));
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) joins[pair_rank(n, a, c)] = rel.at(a, c);
    result.space.emplace(n, std::move(joins));
    return result;
}

/// (A, B, C) is dependent when A meets B or the set join AB meets C.
inline bool dependent(const JoinSpace& s, const PointSet& A, const PointSet& B, const PointSet& C) {
    return A.intersects(B) || s.set_join(A, B).intersects(C);
}

/// (A, B, C, D) is dependent when (A, B, C) is, or (AB)C meets D.
inline bool dependent(const JoinSpace& s, const PointSet& A, const PointSet& B, const PointSet& C,
                      const PointSet& D) {
    if (dependent(s, A, B, C)) return true;
    return s.set_join(s.set_join(A, B), C).intersects(D);
}

inline bool dependent(const JoinSpace& s, int a, int b, int c) {
    return a == b || s.join(a, b).contains(c);
}

inline bool dependent(const JoinSpace& s, int a, int b, int c, int d) {
    if (dependent(s, a, b, c)) return true;
    return s.set_join(s.join(a, b), c).contains(d);
}

}  // namespace joingeo
