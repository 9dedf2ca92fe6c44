#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "joingeo/joingeo.hpp"

using namespace joingeo;

TEST_CASE("primality testing") {
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(127));
}

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    for (int a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
}

TEST_CASE("minimal join space") {
    JoinSpace m = minimal_join_space(5);
    for (int a = 0; a < 5; ++a)
        for (int c = 0; c < 5; ++c)
            CHECK(m.join(a, c) == (a == c ? PointSet::single(a) : PointSet::of({a, c})));
}

TEST_CASE("nine-point affine plane structure") {
    PrimeField f3(3);
    JoinSpace ag = affine_join_space(f3, 2);
    CHECK(ag.point_count() == 9);

    // index = x * 3 + y; the line through (0,0) and (1,0) is y = 0
    CHECK(ag.join(0, 3) == PointSet::of({0, 3, 6}));
    // the line through (0,0) and (1,1) is the main diagonal
    CHECK(ag.join(0, 4) == PointSet::of({0, 4, 8}));
    for (int a = 0; a < 9; ++a)
        for (int c = a + 1; c < 9; ++c) CHECK(ag.join(a, c).count() == 3);

    std::vector<std::string> labels = affine_point_labels(f3, 2);
    CHECK(labels[0] == "(0,0)");
    CHECK(labels[3] == "(1,0)");
    CHECK(labels[7] == "(2,1)");

    SetLineStructure lines = affine_line_structure(f3, 2);
    CHECK(lines.line_count() == 12);
    CHECK(validate_lines(lines).ok);
}

TEST_CASE("affine spaces over F_2 are minimal") {
    CHECK(affine_join_space(PrimeField(2), 2) == minimal_join_space(4));
    CHECK(affine_join_space(PrimeField(2), 3) == minimal_join_space(8));
}

TEST_CASE("affine guards") {
    CHECK_THROWS_AS(affine_join_space(PrimeField(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(affine_join_space(PrimeField(2), 8), ResourceError);   // 256 points
    CHECK_THROWS_AS(affine_join_space(PrimeField(11), 3), ResourceError);  // 1331 points
    CHECK_NOTHROW(affine_join_space(PrimeField(11), 2));                   // 121 points
}

TEST_CASE("Fano plane from homogeneous coordinates") {
    ProjectiveGeometry pg = projective_space(PrimeField(2), 2);
    CHECK(pg.space.point_count() == 7);
    CHECK(pg.lines.line_count() == 7);
    for (const PointSet& l : pg.lines.rows()) CHECK(l.count() == 3);

    CHECK(pg.labels[0] == "[0:0:1]");
    CHECK(pg.labels[1] == "[0:1:0]");
    CHECK(pg.labels[3] == "[1:0:0]");
    CHECK(pg.labels[6] == "[1:1:1]");

    // lines as sets, in ascending bitmask order
    const std::vector<PointSet> expected = {
        PointSet::of({0, 1, 2}), PointSet::of({0, 3, 4}), PointSet::of({1, 3, 5}), PointSet::of({2, 4, 5}),
        PointSet::of({2, 3, 6}), PointSet::of({1, 4, 6}), PointSet::of({0, 5, 6})};
    CHECK(pg.lines.rows() == expected);
    CHECK(pg.space.join(0, 1) == PointSet::of({0, 1, 2}));
    CHECK(pg.space.join(3, 6) == PointSet::of({2, 3, 6}));
}

TEST_CASE("projective counts for order 3 and dimension 3") {
    ProjectiveGeometry pg13 = projective_space(PrimeField(3), 2);
    CHECK(pg13.space.point_count() == 13);
    CHECK(pg13.lines.line_count() == 13);
    for (const PointSet& l : pg13.lines.rows()) CHECK(l.count() == 4);

    ProjectiveGeometry pg15 = projective_space(PrimeField(2), 3);
    CHECK(pg15.space.point_count() == 15);
    CHECK(pg15.lines.line_count() == 35);
    for (const PointSet& l : pg15.lines.rows()) CHECK(l.count() == 3);
}

TEST_CASE("the two projective construction routes agree") {
    // joins are computed by per-pair span arithmetic, lines by subspace
    // dedup; composing the line route back into a join space must give the
    // same object.
    for (const ProjectiveGeometry& pg :
         {projective_space(PrimeField(2), 2), projective_space(PrimeField(3), 2),
          projective_space(PrimeField(2), 3)}) {
        CHECK(pg.space == associated_join_space(set_represent(pg.lines)));
    }
}

TEST_CASE("degenerate projective line PG(1,p)") {
    ProjectiveGeometry pg = projective_space(PrimeField(3), 1);
    CHECK(pg.space.point_count() == 4);
    CHECK(pg.lines.line_count() == 1);
    CHECK(pg.lines.rows()[0] == PointSet::full(4));
    CHECK(check_projective(pg.space).ok);
}

TEST_CASE("projective guards") {
    CHECK_THROWS_AS(projective_space(PrimeField(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(projective_space(PrimeField(2), 7), ResourceError);  // 255 points
    CHECK_NOTHROW(projective_space(PrimeField(11), 1));                  // 12 points
}

TEST_CASE("grid segment space") {
    SECTION("1x1: single point") {
        JoinSpace g = grid_segment_space({1, 1});
        CHECK(g.point_count() == 1);
    }
    SECTION("3x1: a row with exact betweenness") {
        JoinSpace g = grid_segment_space({3, 1});
        CHECK(g.join(0, 1) == PointSet::of({0, 1}));
        CHECK(g.join(0, 2) == PointSet::of({0, 1, 2}));
    }
    SECTION("2x2: diagonals have no interior lattice point") {
        JoinSpace g = grid_segment_space({2, 2});
        CHECK(g.join(0, 3) == PointSet::of({0, 3}));
        CHECK(g.join(1, 2) == PointSet::of({1, 2}));
    }
    SECTION("3x3: diagonal midpoint") {
        JoinSpace g = grid_segment_space({3, 3});
        CHECK(g.join(0, 8) == PointSet::of({0, 4, 8}));   // (0,0)-(2,2) through (1,1)
        CHECK(g.join(2, 6) == PointSet::of({2, 4, 6}));   // (2,0)-(0,2) through (1,1)
        CHECK(g.join(1, 5) == PointSet::of({1, 5}));      // knight-step: nothing between
    }
    SECTION("labels are (x,y) with row-major indexing") {
        std::vector<std::string> labels = grid_point_labels({3, 2});
        CHECK(labels[0] == "(0,0)");
        CHECK(labels[2] == "(2,0)");
        CHECK(labels[3] == "(0,1)");
    }
    SECTION("guards") {
        CHECK_THROWS_AS(grid_segment_space({0, 3}), std::invalid_argument);
        CHECK_THROWS_AS(grid_segment_space({13, 10}), ResourceError);
        CHECK_NOTHROW(grid_segment_space({16, 8}));
    }
}

TEST_CASE("generators are deterministic") {
    CHECK(affine_join_space(PrimeField(3), 2) == affine_join_space(PrimeField(3), 2));
    CHECK(projective_space(PrimeField(2), 2).space == projective_space(PrimeField(2), 2).space);
    CHECK(grid_segment_space({4, 3}) == grid_segment_space({4, 3}));
}
