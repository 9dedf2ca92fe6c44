#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "joingeo/join_space.hpp"
#include "joingeo/line_space.hpp"
#include "joingeo/point_set.hpp"

namespace joingeo {

/// Raised when a file cannot be read or does not match its format.
class FileFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A join space together with optional point labels, as stored in a
/// "joinspace-v1" file.
struct SpaceFile {
    JoinSpace space;
    std::vector<std::string> labels;  // empty, or one label per point
};

/// Raw contents of a "linespace-v1" file. The rows are not required to
/// satisfy any incidence axioms, so invalid structures can be loaded and
/// then diagnosed.
struct LineFile {
    int points = 0;
    std::vector<PointSet> lines;
    std::vector<std::string> labels;

    AbstractLineSpace to_line_space() const { return AbstractLineSpace(points, lines); }
};

namespace detail {

inline void require_format(bool cond, const std::string& msg) {
    if (!cond) throw FileFormatError(msg);
}

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

inline void append_int_list(std::string& out, const PointSet& s) {
    out += '[';
    bool first = true;
    for (int m : s) {
        if (!first) out += ", ";
        out += std::to_string(m);
        first = false;
    }
    out += ']';
}

inline void append_labels_line(std::string& out, const std::vector<std::string>& labels) {
    out += "  \"labels\": [";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += quote(labels[i]);
    }
    out += "]";
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(std::string("not valid JSON: ") + e.what());
    }
}

inline int read_point_count(const nlohmann::json& j) {
    require_format(j.is_object(), "top level must be a JSON object");
    require_format(j.contains("points") && j["points"].is_number_integer(),
                   "missing integer field \"points\"");
    int n = j["points"].get<int>();
    require_format(n >= 1 && n <= kMaxPoints,
                   "\"points\" must be between 1 and " + std::to_string(kMaxPoints));
    return n;
}

inline std::vector<std::string> read_labels(const nlohmann::json& j, int n) {
    if (!j.contains("labels")) return {};
    const auto& arr = j["labels"];
    require_format(arr.is_array() && static_cast<int>(arr.size()) == n,
                   "\"labels\" must list one string per point");
    std::vector<std::string> labels;
    for (const auto& item : arr) {
        require_format(item.is_string(), "\"labels\" must list one string per point");
        labels.push_back(item.get<std::string>());
    }
    return labels;
}

inline PointSet read_member_list(const nlohmann::json& arr, int n, const std::string& where) {
    require_format(arr.is_array(), where + " must be an array of point indices");
    PointSet s;
    for (const auto& item : arr) {
        require_format(item.is_number_integer(), where + " must contain integers only");
        int m = item.get<int>();
        require_format(m >= 0 && m < n, where + " mentions out-of-range point " + std::to_string(m));
        s.add(m);
    }
    return s;
}

}  // namespace detail

/// Canonical "joinspace-v1" text: one join entry [a, c, [members]] per line
/// in pair order, members ascending. Loading and re-saving a canonical file
/// reproduces it byte for byte.
inline std::string serialize(const SpaceFile& f) {
    const JoinSpace& s = f.space;
    const int n = s.point_count();
    std::string out = "{\n  \"format\": \"joinspace-v1\",\n  \"points\": " + std::to_string(n) + ",\n";
    if (pair_count(n) == 0) {
        out += "  \"joins\": []";
    } else {
        out += "  \"joins\": [\n";
        for (int a = 0, r = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c, ++r) {
                out += "    [" + std::to_string(a) + ", " + std::to_string(c) + ", ";
                detail::append_int_list(out, s.join(a, c));
                out += r + 1 < pair_count(n) ? "],\n" : "]\n";
            }
        out += "  ]";
    }
    if (!f.labels.empty()) {
        out += ",\n";
        detail::append_labels_line(out, f.labels);
    }
    out += "\n}\n";
    return out;
}

/// Canonical "linespace-v1" text: one line row per text line, points
/// ascending.
inline std::string serialize(const LineFile& f) {
    std::string out = "{\n  \"format\": \"linespace-v1\",\n  \"points\": " + std::to_string(f.points) + ",\n";
    if (f.lines.empty()) {
        out += "  \"lines\": []";
    } else {
        out += "  \"lines\": [\n";
        for (std::size_t i = 0; i < f.lines.size(); ++i) {
            out += "    ";
            detail::append_int_list(out, f.lines[i]);
            out += i + 1 < f.lines.size() ? ",\n" : "\n";
        }
        out += "  ]";
    }
    if (!f.labels.empty()) {
        out += ",\n";
        detail::append_labels_line(out, f.labels);
    }
    out += "\n}\n";
    return out;
}

/// One-line "joinspace-v1" rendering for streaming enumerations.
inline std::string serialize_compact(const JoinSpace& s) {
    const int n = s.point_count();
    std::string out = "{\"format\":\"joinspace-v1\",\"points\":" + std::to_string(n) + ",\"joins\":[";
    for (int a = 0, r = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c, ++r) {
            if (r) out += ',';
            out += '[' + std::to_string(a) + ',' + std::to_string(c) + ",[";
            bool first = true;
            for (int m : s.join(a, c)) {
                if (!first) out += ',';
                out += std::to_string(m);
                first = false;
            }
            out += "]]";
        }
    out += "]}";
    return out;
}

inline SpaceFile parse_space_file(const std::string& text) {
    nlohmann::json j = detail::parse_json(text);
    detail::require_format(j.is_object() && j.contains("format") && j["format"].is_string() &&
                               j["format"] == "joinspace-v1",
                           "expected \"format\": \"joinspace-v1\"");
    const int n = detail::read_point_count(j);
    detail::require_format(j.contains("joins") && j["joins"].is_array(), "missing array field \"joins\"");
    const auto& arr = j["joins"];
    detail::require_format(static_cast<int>(arr.size()) == pair_count(n),
                           "\"joins\" must have one entry per point pair (" +
                               std::to_string(pair_count(n)) + " expected, " +
                               std::to_string(arr.size()) + " found)");

    std::vector<PointSet> joins(pair_count(n));
    std::vector<bool> seen(pair_count(n), false);
    for (const auto& entry : arr) {
        detail::require_format(entry.is_array() && entry.size() == 3 && entry[0].is_number_integer() &&
                                   entry[1].is_number_integer(),
                               "each join entry must look like [a, c, [members]]");
        int a = entry[0].get<int>();
        int c = entry[1].get<int>();
        detail::require_format(a >= 0 && a < c && c < n,
                               "join entry endpoints must satisfy 0 <= a < c < points, got [" +
                                   std::to_string(a) + ", " + std::to_string(c) + "]");
        std::string where = "join of (" + std::to_string(a) + ", " + std::to_string(c) + ")";
        int r = pair_rank(n, a, c);
        detail::require_format(!seen[r], where + " appears twice");
        seen[r] = true;
        PointSet members = detail::read_member_list(entry[2], n, where);
        detail::require_format(members.contains(a) && members.contains(c),
                               where + " must contain both endpoints");
        joins[r] = members;
    }
    return SpaceFile{JoinSpace(n, std::move(joins)), detail::read_labels(j, n)};
}

inline LineFile parse_line_file(const std::string& text) {
    nlohmann::json j = detail::parse_json(text);
    detail::require_format(j.is_object() && j.contains("format") && j["format"].is_string() &&
                               j["format"] == "linespace-v1",
                           "expected \"format\": \"linespace-v1\"");
    LineFile f;
    f.points = detail::read_point_count(j);
    detail::require_format(j.contains("lines") && j["lines"].is_array(), "missing array field \"lines\"");
    int i = 0;
    for (const auto& row : j["lines"]) {
        f.lines.push_back(detail::read_member_list(row, f.points, "line " + std::to_string(i)));
        ++i;
    }
    f.labels = detail::read_labels(j, f.points);
    return f;
}

/// Reads the "format" tag so callers can dispatch without knowing the kind.
inline std::string sniff_format(const std::string& text) {
    nlohmann::json j = detail::parse_json(text);
    detail::require_format(j.is_object() && j.contains("format") && j["format"].is_string(),
                           "missing string field \"format\"");
    return j["format"].get<std::string>();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileFormatError("cannot write " + path);
    out << text;
}

inline SpaceFile load_space_file(const std::string& path) {
    try {
        return parse_space_file(read_text_file(path));
    } catch (const FileFormatError& e) {
        throw FileFormatError(path + ": " + e.what());
    }
}

inline LineFile load_line_file(const std::string& path) {
    try {
        return parse_line_file(read_text_file(path));
    } catch (const FileFormatError& e) {
        throw FileFormatError(path + ": " + e.what());
    }
}

inline void save_space_file(const std::string& path, const SpaceFile& f) {
    write_text_file(path, serialize(f));
}

inline void save_line_file(const std::string& path, const LineFile& f) {
    write_text_file(path, serialize(f));
}

inline LineFile line_file_from(const AbstractLineSpace& ls, std::vector<std::string> labels = {}) {
    return LineFile{ls.point_count(), ls.rows(), std::move(labels)};
}

inline LineFile line_file_from(const SetLineStructure& ls, std::vector<std::string> labels = {}) {
    return LineFile{ls.point_count(), ls.lines(), std::move(labels)};
}

}  // namespace joingeo
