#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "densewin/occ.hpp"
#include "densewin/region.hpp"

using namespace densewin;

namespace {

OccList random_occ(std::mt19937_64& rng, std::size_t n, Timestamp range) {
    std::set<Timestamp> s;
    std::uniform_int_distribution<Timestamp> d(0, range);
    while (s.size() < n) s.insert(d(rng));
    return {s.begin(), s.end()};
}

IntervalList random_intervals(std::mt19937_64& rng, std::size_t n, Timestamp range) {
    IntervalList out;
    std::uniform_int_distribution<Timestamp> start(0, range), len(0, range / 5);
    for (std::size_t i = 0; i < n; ++i) {
        Timestamp s = start(rng);
        out.push_back({s, s + len(rng)});
    }
    return out;
}

bool covered(const IntervalList& list, double t) {
    return std::any_of(list.begin(), list.end(),
                       [&](const Interval& iv) { return iv.s <= t && t <= iv.e; });
}

}  // namespace

TEST(OccIntersect, Basics) {
    OccList a{1, 3, 5, 7};
    EXPECT_TRUE(occ_intersect(a, {}).empty());
    EXPECT_EQ(occ_intersect(a, a), a);
    EXPECT_EQ(occ_intersect(a, OccList{0, 3, 4, 7, 9}), (OccList{3, 7}));
}

TEST(OccIntersect, MatchesSetIntersectionAcrossSizeRatios) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t small = rng() % 20;
        const std::size_t large = small + rng() % 3000;
        auto a = random_occ(rng, small, 5000);
        auto b = random_occ(rng, large, 5000);
        OccList expected;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(expected));
        EXPECT_EQ(occ_intersect(a, b), expected);
        EXPECT_EQ(occ_intersect(b, a), expected);
    }
}

TEST(IntervalSupport, CountsClosedWindow) {
    OccList occ{0, 1, 2, 7, 8, 17};
    EXPECT_EQ(interval_support({}, 3, 10), 0);
    EXPECT_EQ(interval_support(occ, 0, 10), 5);
    EXPECT_EQ(interval_support(occ, 7, 10), 3);
    EXPECT_EQ(interval_support(occ, 8, 10), 2);
    EXPECT_EQ(interval_support(occ, 18, 10), 0);
    EXPECT_EQ(lower_index(occ, 3), 3u);
    EXPECT_EQ(upper_index(occ, 7), 4u);
}

TEST(Region, CoalescesAbuttingAndOverlapping) {
    Region r{{15, 25}, {0, 15}, {30, 31}, {31, 40}, {50, 60}, {52, 55}};
    EXPECT_EQ(r.components(), (IntervalList{{0, 25}, {30, 40}, {50, 60}}));
    EXPECT_EQ(r.measure(), 25 + 10 + 10);
    EXPECT_TRUE(r.contains(Interval{1, 24}));
    EXPECT_FALSE(r.contains(Interval{20, 31}));
}

TEST(Region, IntersectEdgeCases) {
    Region x{{0, 13}, {15, 25}};
    EXPECT_TRUE(region_intersect(x, Region{}).empty());
    EXPECT_EQ(region_intersect(x, Region::span_of(0, 100)), x);
    EXPECT_EQ(region_intersect(Region{{0, 10}}, Region{{5, 20}}).components(),
              (IntervalList{{5, 10}}));
    // Touching at a point keeps the point.
    EXPECT_EQ(region_intersect(Region{{0, 5}}, Region{{5, 9}}).components(),
              (IntervalList{{5, 5}}));
    std::vector<Region> none;
    EXPECT_TRUE(region_intersect(none).empty());
}

TEST(Region, UnionMeasure) {
    EXPECT_EQ(region_union_measure({}), 0);
    IntervalList ivs{{0, 10}, {5, 20}, {30, 30}};
    EXPECT_EQ(region_union_measure(ivs), 20);
}

// Algebraic laws checked by sampling membership of integer and half-integer points.
TEST(Region, AlgebraLawsByMembership) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto la = random_intervals(rng, rng() % 5, 100);
        auto lb = random_intervals(rng, rng() % 5, 100);
        auto lc = random_intervals(rng, rng() % 5, 100);
        Region a(la), b(lb), c(lc);

        EXPECT_EQ(region_intersect(a, b), region_intersect(b, a));
        EXPECT_EQ(region_intersect(region_intersect(a, b), c),
                  region_intersect(a, region_intersect(b, c)));
        EXPECT_EQ(region_intersect(a, a), a);
        EXPECT_EQ(region_union(a, b), region_union(b, a));

        auto ab = region_intersect(a, b);
        auto u = region_union(a, b);
        for (double t = -1; t <= 130; t += 0.5) {
            const bool in_a = covered(la, t), in_b = covered(lb, t);
            ASSERT_EQ(covered(ab.components(), t), in_a && in_b) << "t=" << t;
            ASSERT_EQ(covered(u.components(), t), in_a || in_b) << "t=" << t;
        }
        for (std::size_t i = 1; i < ab.components().size(); ++i) {
            EXPECT_LT(ab.components()[i - 1].e, ab.components()[i].s);
        }
    }
}
