#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "joingeo/point_set.hpp"

namespace joingeo {

/// Thrown when an operation would exceed a configured enumeration bound
/// (power-set scans, exhaustive model streams, oversized ground sets).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Counterexample attached to a failed check. `points` and `sets` are listed
/// in the order of the violated condition's quantifier prefix, so plugging
/// them back into the condition reproduces the violation.
struct Witness {
    std::vector<int> points;
    std::vector<PointSet> sets;
    std::string note;

    std::string to_string() const {
        std::string out;
        bool sep = false;
        for (int p : points) {
            if (sep) out += ", ";
            out += "p" + std::to_string(p);
            sep = true;
        }
        for (const PointSet& s : sets) {
            if (sep) out += ", ";
            out += s.to_string();
            sep = true;
        }
        if (!note.empty()) {
            if (sep) out += " ";
            out += "[" + note + "]";
        }
        return out;
    }
};

/// Verdict of a single named check. A witness is present exactly when the
/// check failed.
struct CheckReport {
    std::string label;
    bool ok = false;
    std::optional<Witness> witness;

    static CheckReport pass(std::string label) { return CheckReport{std::move(label), true, std::nullopt}; }
    static CheckReport fail(std::string label, Witness w) {
        return CheckReport{std::move(label), false, std::move(w)};
    }

    std::string to_string() const {
        if (ok) return label + ": ok";
        return label + ": fail (" + (witness ? witness->to_string() : std::string("no witness")) + ")";
    }
};

/// One numbered condition of a multi-condition criterion.
struct Condition {
    int id = 0;
    bool holds = false;
    std::optional<Witness> witness;
};

/// Evaluation of an equivalence-of-conditions theorem on one space. The
/// theorem claims all conditions have the same truth value (not that all are
/// true); `all_equal` is the assertable fact. When the theorem carries a
/// hypothesis and the space fails it, `hypothesis_met` is false and no
/// equality claim is made.
struct ConditionVector {
    std::string label;
    bool hypothesis_met = true;
    std::optional<Witness> hypothesis_witness;
    std::vector<Condition> conditions;

    bool all_equal() const {
        for (const Condition& c : conditions)
            if (c.holds != conditions.front().holds) return false;
        return true;
    }

    bool all_true() const {
        for (const Condition& c : conditions)
            if (!c.holds) return false;
        return true;
    }

    std::string to_string() const {
        std::string out = label + ":";
        if (!hypothesis_met) return out + " hypothesis not met";
        for (const Condition& c : conditions)
            out += " (" + std::to_string(c.id) + ")=" + (c.holds ? "T" : "F");
        return out;
    }
};

}  // namespace joingeo
