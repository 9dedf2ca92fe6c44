#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "joingeo/enumerate.hpp"
#include "joingeo/generators.hpp"
#include "joingeo/io.hpp"

using namespace joingeo;
using Catch::Matchers::ContainsSubstring;

namespace {

JoinSpace one_fat_join_space() {
    std::vector<PointSet> joins(pair_count(3));
    joins[pair_rank(3, 0, 1)] = PointSet::of({0, 1, 2});
    joins[pair_rank(3, 0, 2)] = PointSet::of({0, 2});
    joins[pair_rank(3, 1, 2)] = PointSet::of({1, 2});
    return JoinSpace(3, joins);
}

std::string temp_path(const std::string& stem) {
    static int counter = 0;
    auto p = std::filesystem::temp_directory_path() /
             ("joingeo_io_" + stem + "_" + std::to_string(counter++) + ".json");
    return p.string();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& stem) : path(temp_path(stem)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("space files serialize to the frozen layout") {
    SpaceFile f{one_fat_join_space(), {}};
    CHECK(serialize(f) ==
          "{\n"
          "  \"format\": \"joinspace-v1\",\n"
          "  \"points\": 3,\n"
          "  \"joins\": [\n"
          "    [0, 1, [0, 1, 2]],\n"
          "    [0, 2, [0, 2]],\n"
          "    [1, 2, [1, 2]]\n"
          "  ]\n"
          "}\n");

    SpaceFile labeled{minimal_join_space(2), {"left", "right"}};
    CHECK(serialize(labeled) ==
          "{\n"
          "  \"format\": \"joinspace-v1\",\n"
          "  \"points\": 2,\n"
          "  \"joins\": [\n"
          "    [0, 1, [0, 1]]\n"
          "  ],\n"
          "  \"labels\": [\"left\", \"right\"]\n"
          "}\n");

    SpaceFile lone{minimal_join_space(1), {}};
    CHECK(serialize(lone) ==
          "{\n"
          "  \"format\": \"joinspace-v1\",\n"
          "  \"points\": 1,\n"
          "  \"joins\": []\n"
          "}\n");
}

TEST_CASE("line files serialize to the frozen layout") {
    LineFile f{2, {PointSet::of({0, 1})}, {}};
    CHECK(serialize(f) ==
          "{\n"
          "  \"format\": \"linespace-v1\",\n"
          "  \"points\": 2,\n"
          "  \"lines\": [\n"
          "    [0, 1]\n"
          "  ]\n"
          "}\n");

    LineFile bare{1, {}, {"origin"}};
    CHECK(serialize(bare) ==
          "{\n"
          "  \"format\": \"linespace-v1\",\n"
          "  \"points\": 1,\n"
          "  \"lines\": [],\n"
          "  \"labels\": [\"origin\"]\n"
          "}\n");
}

TEST_CASE("compact rendering is a single line") {
    CHECK(serialize_compact(minimal_join_space(3)) ==
          "{\"format\":\"joinspace-v1\",\"points\":3,"
          "\"joins\":[[0,1,[0,1]],[0,2,[0,2]],[1,2,[1,2]]]}");
    // compact output is itself a loadable joinspace-v1 document
    CHECK(parse_space_file(serialize_compact(one_fat_join_space())).space == one_fat_join_space());
}

TEST_CASE("serialization is a canonical fixpoint under parsing") {
    std::vector<SpaceFile> files;
    files.push_back({affine_join_space(PrimeField(3), 2), affine_point_labels(PrimeField(3), 2)});
    ProjectiveGeometry fano = projective_space(PrimeField(2), 2);
    files.push_back({fano.space, fano.labels});
    for (const JoinSpace& s : sample_join_spaces(6, 10, 2026)) files.push_back({s, {}});

    for (const SpaceFile& f : files) {
        std::string text = serialize(f);
        SpaceFile back = parse_space_file(text);
        CHECK(back.space == f.space);
        CHECK(back.labels == f.labels);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("parsing tolerates non-canonical input") {
    // joins out of order, extra whitespace, unsorted members
    SpaceFile f = parse_space_file(R"({
        "points": 3,
        "format": "joinspace-v1",
        "joins": [[1, 2, [2, 1]], [0, 1, [2, 1, 0]], [0, 2, [0, 2]]]
    })");
    CHECK(f.space == one_fat_join_space());
    CHECK(f.labels.empty());
}

TEST_CASE("malformed space files are rejected") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_space_file(text), FileFormatError);
    };
    bad("not json at all");
    bad("[1, 2, 3]");
    bad(R"({"points": 2, "joins": [[0, 1, [0, 1]]]})");                               // no format
    bad(R"({"format": "linespace-v1", "points": 2, "joins": [[0, 1, [0, 1]]]})");     // wrong tag
    bad(R"({"format": "joinspace-v1", "joins": []})");                                // no points
    bad(R"({"format": "joinspace-v1", "points": "2", "joins": [[0, 1, [0, 1]]]})");   // points not int
    bad(R"({"format": "joinspace-v1", "points": 0, "joins": []})");                   // too few points
    bad(R"({"format": "joinspace-v1", "points": 129, "joins": []})");                 // too many points
    bad(R"({"format": "joinspace-v1", "points": 2})");                                // no joins
    bad(R"({"format": "joinspace-v1", "points": 3, "joins": [[0, 1, [0, 1]]]})");     // entry count
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 1]]})");             // short entry
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[1, 0, [0, 1]]]})");     // a > c
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 0, [0, 1]]]})");     // a == c
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 2, [0, 2]]]})");     // c out of range
    bad(R"({"format": "joinspace-v1", "points": 3,
            "joins": [[0, 1, [0, 1]], [0, 1, [0, 1]], [1, 2, [1, 2]]]})");            // duplicate pair
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 1, [0]]]})");        // endpoint missing
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 1, [0, 1, 5]]]})");  // member range
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 1, [-1, 0, 1]]]})");
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 1, [0, "x"]]]})");   // member type
    bad(R"({"format": "joinspace-v1", "points": 2, "joins": [[0, 1, [0, 1]]], "labels": ["a"]})");
}

TEST_CASE("line files load raw and are diagnosed separately") {
    // a one-point "line" violates incidence rules but must still load
    LineFile f = parse_line_file(
        R"({"format": "linespace-v1", "points": 3, "lines": [[0], [0, 1, 2]]})");
    REQUIRE(f.lines.size() == 2);
    CheckReport r = validate_lines(f.to_line_space());
    CHECK_FALSE(r.ok);

    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_line_file(text), FileFormatError);
    };
    bad(R"({"format": "joinspace-v1", "points": 2, "lines": []})");     // wrong tag
    bad(R"({"format": "linespace-v1", "points": 2})");                  // no lines
    bad(R"({"format": "linespace-v1", "points": 2, "lines": [[0, 7]]})");
    bad(R"({"format": "linespace-v1", "points": 2, "lines": [0]})");    // row not an array
}

TEST_CASE("format sniffing") {
    CHECK(sniff_format(serialize(SpaceFile{minimal_join_space(2), {}})) == "joinspace-v1");
    CHECK(sniff_format(serialize(LineFile{2, {PointSet::of({0, 1})}, {}})) == "linespace-v1");
    CHECK(sniff_format(R"({"format": "widget-v9"})") == "widget-v9");
    CHECK_THROWS_AS(sniff_format(R"({"points": 2})"), FileFormatError);
    CHECK_THROWS_AS(sniff_format("{"), FileFormatError);
}

TEST_CASE("file save and load round-trips byte for byte") {
    SECTION("join space with labels") {
        TempFile t("space");
        SpaceFile f{affine_join_space(PrimeField(3), 2), affine_point_labels(PrimeField(3), 2)};
        save_space_file(t.path, f);
        SpaceFile back = load_space_file(t.path);
        CHECK(back.space == f.space);
        CHECK(back.labels == f.labels);
        save_space_file(t.path, back);
        CHECK(read_text_file(t.path) == serialize(f));
    }
    SECTION("line structure") {
        TempFile t("lines");
        ProjectiveGeometry fano = projective_space(PrimeField(2), 2);
        LineFile f = line_file_from(fano.lines, fano.labels);
        save_line_file(t.path, f);
        LineFile back = load_line_file(t.path);
        CHECK(back.points == f.points);
        CHECK(back.lines == f.lines);
        CHECK(back.labels == f.labels);
        CHECK(serialize(back) == serialize(f));
    }
    SECTION("labels with embedded quotes survive") {
        TempFile t("quotes");
        SpaceFile f{minimal_join_space(2), {"say \"hi\"", "back\\slash"}};
        save_space_file(t.path, f);
        CHECK(load_space_file(t.path).labels == f.labels);
    }
}

TEST_CASE("load errors carry the file path") {
    std::string missing = temp_path("missing");
    CHECK_THROWS_WITH(load_space_file(missing), ContainsSubstring(missing));
    CHECK_THROWS_WITH(load_line_file(missing), ContainsSubstring(missing));

    TempFile t("badspace");
    write_text_file(t.path, R"({"format": "joinspace-v1", "points": 0, "joins": []})");
    CHECK_THROWS_WITH(load_space_file(t.path), ContainsSubstring(t.path));
}

TEST_CASE("line files can be built from either line-space view") {
    ProjectiveGeometry fano = projective_space(PrimeField(2), 2);
    SetLineStructure sorted = set_represent(fano.lines);
    LineFile from_abstract = line_file_from(fano.lines);
    LineFile from_set = line_file_from(sorted);
    CHECK(from_abstract.points == from_set.points);
    CHECK(from_abstract.lines == from_set.lines);  // generator rows are already sorted
    CHECK(from_abstract.labels.empty());
}
