#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "joingeo/point_set.hpp"

using namespace joingeo;

namespace {

// Reference model: an ordered set of ints. Every PointSet operation is
// checked against the same operation here.
std::set<int> model_of(const PointSet& s) {
    std::set<int> out;
    for (int p : s) out.insert(p);
    return out;
}

}  // namespace

TEST_CASE("empty set basics") {
    PointSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);
    CHECK(s.begin() == s.end());
    CHECK(s.to_string() == "{}");
}

TEST_CASE("single and of") {
    PointSet s = PointSet::single(5);
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(4));
    CHECK(s.count() == 1);
    CHECK(s.first() == 5);

    PointSet t = PointSet::of({0, 3, 6});
    CHECK(model_of(t) == std::set<int>{0, 3, 6});
    CHECK(t.to_string() == "{0, 3, 6}");
}

TEST_CASE("full covers exactly 0..n-1") {
    for (int n : {0, 1, 7, 63, 64, 65, 127, 128}) {
        PointSet f = PointSet::full(n);
        CHECK(f.count() == n);
        if (n > 0) {
            CHECK(f.contains(0));
            CHECK(f.contains(n - 1));
        }
        if (n < kMaxPoints) CHECK_FALSE(f.contains(n));
    }
}

TEST_CASE("add/remove round both word boundaries") {
    PointSet s;
    for (int p : {0, 31, 63, 64, 96, 127}) s.add(p);
    CHECK(model_of(s) == std::set<int>{0, 31, 63, 64, 96, 127});
    s.remove(64);
    s.remove(0);
    CHECK(model_of(s) == std::set<int>{31, 63, 96, 127});
    CHECK(s.first() == 31);
    CHECK(s.next_after(63) == 96);
    CHECK(s.next_after(127) == -1);
}

TEST_CASE("bounds are enforced") {
    PointSet s;
    CHECK_THROWS_AS(s.add(-1), std::out_of_range);
    CHECK_THROWS_AS(s.add(kMaxPoints), std::out_of_range);
    CHECK_THROWS_AS(s.contains(kMaxPoints), std::out_of_range);
    CHECK_THROWS_AS(PointSet::full(kMaxPoints + 1), std::out_of_range);
}

TEST_CASE("mask round trip") {
    CHECK(PointSet::from_mask(0b1011).to_mask() == 0b1011);
    CHECK(model_of(PointSet::from_mask(0b1011)) == std::set<int>{0, 1, 3});
    PointSet high = PointSet::single(70);
    CHECK_THROWS_AS(high.to_mask(), std::out_of_range);
}

TEST_CASE("set algebra agrees with the reference model") {
    std::mt19937_64 rng(20260814);
    for (int round = 0; round < 200; ++round) {
        PointSet a, b;
        for (int k = 0; k < 20; ++k) {
            a.add(static_cast<int>(rng() % kMaxPoints));
            b.add(static_cast<int>(rng() % kMaxPoints));
        }
        std::set<int> ma = model_of(a), mb = model_of(b);

        std::set<int> uni, inter, diff;
        std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(uni, uni.end()));
        std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(inter, inter.end()));
        std::set_difference(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(diff, diff.end()));

        CHECK(model_of(a | b) == uni);
        CHECK(model_of(a & b) == inter);
        CHECK(model_of(a - b) == diff);
        CHECK(a.subset_of(b) == std::includes(mb.begin(), mb.end(), ma.begin(), ma.end()));
        CHECK(a.intersects(b) == !inter.empty());
        CHECK(a.count() == static_cast<int>(ma.size()));
    }
}

TEST_CASE("iteration is ascending and complete") {
    PointSet s = PointSet::of({127, 2, 64, 63, 9});
    std::vector<int> seen;
    for (int p : s) seen.push_back(p);
    CHECK(seen == std::vector<int>{2, 9, 63, 64, 127});
}

TEST_CASE("numeric order is total and matches word comparison") {
    PointSet a = PointSet::of({0});
    PointSet b = PointSet::of({1});
    PointSet c = PointSet::of({0, 1});
    PointSet d = PointSet::of({64});
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK_FALSE(d < a);
    CHECK_FALSE(a < a);

    // sorting is deterministic and strict-weak
    std::vector<PointSet> v{d, c, b, a};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<PointSet>{a, b, c, d});
}

TEST_CASE("within checks the ground set") {
    CHECK(PointSet::of({0, 2}).within(3));
    CHECK_FALSE(PointSet::of({0, 3}).within(3));
    CHECK(PointSet().within(0));
}
