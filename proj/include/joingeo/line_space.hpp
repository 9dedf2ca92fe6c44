#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "joingeo/axioms.hpp"
#include "joingeo/check_report.hpp"
#include "joingeo/join_space.hpp"
#include "joingeo/point_set.hpp"

namespace joingeo {

/// A point-line incidence structure given by an arbitrary m x n incidence
/// matrix, one bitmask row per line. Nothing is assumed about the rows; see
/// validate_lines().
class AbstractLineSpace {
public:
    AbstractLineSpace(int n, std::vector<PointSet> rows) : n_(n), rows_(std::move(rows)) {
        if (n < 1 || n > kMaxPoints) throw std::invalid_argument("AbstractLineSpace: point count out of range");
        for (const PointSet& r : rows_)
            if (!r.within(n)) throw std::invalid_argument("AbstractLineSpace: row exceeds the ground set");
    }

    int point_count() const { return n_; }
    int line_count() const { return static_cast<int>(rows_.size()); }
    bool incident(int point, int line) const { return rows_.at(line).contains(point); }
    const std::vector<PointSet>& rows() const { return rows_; }

private:
    int n_ = 0;
    std::vector<PointSet> rows_;
};

/// A line space in set representation: lines are distinct subsets of the
/// ground set, kept sorted in numeric order. Duplicate lines are a
/// structural error; the two-point axioms are checked by validate_lines().
class SetLineStructure {
public:
    SetLineStructure(int n, std::vector<PointSet> lines) : n_(n), lines_(std::move(lines)) {
        if (n < 1 || n > kMaxPoints) throw std::invalid_argument("SetLineStructure: point count out of range");
        for (const PointSet& l : lines_)
            if (!l.within(n)) throw std::invalid_argument("SetLineStructure: line exceeds the ground set");
        std::sort(lines_.begin(), lines_.end());
        if (std::adjacent_find(lines_.begin(), lines_.end()) != lines_.end())
            throw std::invalid_argument("SetLineStructure: duplicate line");
    }

    int point_count() const { return n_; }
    int line_count() const { return static_cast<int>(lines_.size()); }
    const std::vector<PointSet>& lines() const { return lines_; }

    /// Index of the unique line through two distinct points, or -1 when the
    /// pair lies on no line or on more than one.
    int line_through(int a, int b) const {
        int found = -1;
        for (std::size_t i = 0; i < lines_.size(); ++i)
            if (lines_[i].contains(a) && lines_[i].contains(b)) {
                if (found >= 0) return -1;
                found = static_cast<int>(i);
            }
        return found;
    }

    friend bool operator==(const SetLineStructure&, const SetLineStructure&) = default;

private:
    int n_ = 0;
    std::vector<PointSet> lines_;
};

namespace detail {

/// Two-point line axioms over any list of line sets: every pair of distinct
/// points lies on exactly one line, and every line has at least two points.
inline CheckReport validate_line_sets(int n, const std::vector<PointSet>& lines) {
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].count() < 2) {
            Witness w;
            w.points = {static_cast<int>(i)};
            w.sets = {lines[i]};
            w.note = "line has fewer than two points";
            return CheckReport::fail("lines-valid", std::move(w));
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int hits = 0;
            for (const PointSet& l : lines)
                if (l.contains(a) && l.contains(b)) ++hits;
            if (hits != 1) {
                Witness w;
                w.points = {a, b};
                w.note = hits == 0 ? "pair lies on no line" : "pair lies on " + std::to_string(hits) + " lines";
                return CheckReport::fail("lines-valid", std::move(w));
            }
        }
    return CheckReport::pass("lines-valid");
}

}  // namespace detail

inline CheckReport validate_lines(const AbstractLineSpace& ls) {
    return detail::validate_line_sets(ls.point_count(), ls.rows());
}

inline CheckReport validate_lines(const SetLineStructure& ls) {
    return detail::validate_line_sets(ls.point_count(), ls.lines());
}

/// Set representation of an abstract line space: each incidence row becomes
/// the set of its points. Faithful for valid line spaces; duplicate rows
/// signal an invalid input and throw.
inline SetLineStructure set_represent(const AbstractLineSpace& ls) {
    return SetLineStructure(ls.point_count(), ls.rows());
}

/// The join space associated with a line space: ab is the point set of the
/// unique line through a and b. Requires a valid line space.
inline JoinSpace associated_join_space(const SetLineStructure& ls) {
    CheckReport valid = validate_lines(ls);
    if (!valid.ok)
        throw std::invalid_argument("associated_join_space: invalid line space: " + valid.witness->to_string());
    const int n = ls.point_count();
    std::vector<PointSet> joins(pair_count(n));
    for (const PointSet& l : ls.lines())
        for (int a : l)
            for (int b : l)
                if (a < b) joins[pair_rank(n, a, b)] = l;
    return JoinSpace(n, std::move(joins));
}

inline JoinSpace associated_join_space(const AbstractLineSpace& ls) {
    return associated_join_space(set_represent(ls));
}

/// The line structure associated with a join space: the distinct joins of
/// pairs of distinct points. Defined for equivalence-relational spaces;
/// anything else throws, naming the failing axiom witness.
inline SetLineStructure associated_line_structure(const JoinSpace& s) {
    CheckReport er = check_equivalence_relational(s);
    if (!er.ok)
        throw std::invalid_argument("associated_line_structure: join space is not equivalence-relational: " +
                                    er.witness->to_string());
    const int n = s.point_count();
    std::vector<PointSet> lines;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) lines.push_back(s.join(a, b));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return SetLineStructure(n, std::move(lines));
}

/// Round trip line space -> join space -> line space; the result must be
/// the original structure.
inline CheckReport roundtrip_check(const SetLineStructure& ls) {
    JoinSpace s = associated_join_space(ls);
    SetLineStructure back = associated_line_structure(s);
    if (back == ls) return CheckReport::pass("roundtrip");
    Witness w;
    for (const PointSet& l : back.lines())
        if (std::find(ls.lines().begin(), ls.lines().end(), l) == ls.lines().end()) {
            w.sets.push_back(l);
            break;
        }
    for (const PointSet& l : ls.lines())
        if (std::find(back.lines().begin(), back.lines().end(), l) == back.lines().end()) {
            w.sets.push_back(l);
            break;
        }
    w.note = "line sets differ";
    return CheckReport::fail("roundtrip", std::move(w));
}

/// Round trip join space -> line space -> join space; requires an
/// equivalence-relational space and must reproduce it exactly.
inline CheckReport roundtrip_check(const JoinSpace& s) {
    CheckReport er = check_equivalence_relational(s);
    if (!er.ok) {
        Witness w = std::move(*er.witness);
        w.note = "not equivalence-relational: " + w.note;
        return CheckReport::fail("roundtrip", std::move(w));
    }
    SetLineStructure ls = associated_line_structure(s);
    JoinSpace back = associated_join_space(ls);
    if (back == s) return CheckReport::pass("roundtrip");
    Witness w;
    for (int a = 0; a < s.point_count(); ++a)
        for (int b = a + 1; b < s.point_count(); ++b)
            if (back.join(a, b) != s.join(a, b)) {
                w.points = {a, b};
                w.sets = {s.join(a, b), back.join(a, b)};
                w.note = "pair join changed";
                return CheckReport::fail("roundtrip", std::move(w));
            }
    w.note = "spaces differ";
    return CheckReport::fail("roundtrip", std::move(w));
}

/// Projectivity of a line space: the two-point axioms plus, through the
/// associated join space, the crossing axiom and density.
inline CheckReport check_projective_line_space(const SetLineStructure& ls) {
    CheckReport valid = validate_lines(ls);
    if (!valid.ok) return CheckReport::fail("line-space-projective", std::move(*valid.witness));
    JoinSpace s = associated_join_space(ls);
    CheckReport pasch = check_pasch(s);
    if (!pasch.ok) return CheckReport::fail("line-space-projective", std::move(*pasch.witness));
    CheckReport dense = check_dense(s);
    if (!dense.ok) return CheckReport::fail("line-space-projective", std::move(*dense.witness));
    return CheckReport::pass("line-space-projective");
}

}  // namespace joingeo
