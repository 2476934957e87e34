#include <gtest/gtest.h>

#include <random>
#include <set>

#include "densewin/occ.hpp"
#include "densewin/oracle.hpp"
#include "densewin/scan.hpp"

using namespace densewin;

namespace {

const OccList occ_a{1, 3, 7, 9, 20, 25};
const OccList occ_b{1, 3, 5, 7, 9, 20, 22, 25};

const ScanOptions full_options{};
const ScanOptions no_blocks{true, true, false};

struct Case {
    OccList occ;
    Timestamp window;
    std::int64_t sigma;
    Timestamp t_max;
};

Case random_case(std::mt19937_64& rng) {
    Case c;
    c.t_max = 1 + static_cast<Timestamp>(rng() % 300);
    std::set<Timestamp> s;
    const std::size_t n = rng() % 40;
    // Mix uniform points with a burst to create local density.
    const Timestamp burst = static_cast<Timestamp>(rng() % (c.t_max + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Timestamp t = (i % 2) ? static_cast<Timestamp>(rng() % (c.t_max + 1))
                              : std::min(c.t_max, burst + static_cast<Timestamp>(rng() % 30));
        s.insert(t);
    }
    s.insert(c.t_max);
    c.occ.assign(s.begin(), s.end());
    c.window = 1 + static_cast<Timestamp>(rng() % 50);
    c.sigma = 1 + static_cast<std::int64_t>(rng() % 6);
    return c;
}

}  // namespace

TEST(Scan, RunningExampleItemB) {
    std::vector<StartRange> ranges{{0, 15}};
    EXPECT_EQ(scan(occ_b, 10, 3, ranges), (IntervalList{{0, 15}, {15, 25}}));
    EXPECT_EQ(scan(occ_b, 10, 3, ranges, ScanOptions::unit_step()),
              (IntervalList{{0, 15}, {15, 25}}));
}

TEST(Scan, TripleIsNotDense) {
    std::vector<StartRange> ranges{{0, 15}};
    EXPECT_TRUE(scan(OccList{3, 7, 20, 25}, 10, 3, ranges).empty());
}

TEST(Scan, OverlappingIntervalsSurviveRecordedBlocks) {
    const OccList occ{0, 1, 2, 7, 8, 17};
    std::vector<StartRange> ranges{{0, 7}};
    const IntervalList expected{{0, 12}, {7, 17}};
    EXPECT_EQ(scan(occ, 10, 3, ranges, full_options), expected);
    EXPECT_EQ(scan(occ, 10, 3, ranges, no_blocks), expected);
    EXPECT_EQ(scan(occ, 10, 3, ranges, ScanOptions::unit_step()), expected);
    EXPECT_EQ(oracle::brute_dense_intervals(occ, 10, 3, 17), expected);
}

TEST(Scan, EmptyInputs) {
    std::vector<StartRange> ranges{{0, 10}};
    EXPECT_TRUE(scan({}, 10, 1, ranges).empty());
    EXPECT_TRUE(scan(occ_b, 10, 1, {}).empty());
}

TEST(Scan, KeepPosition) {
    EXPECT_EQ(keep_position(occ_b, 0, 10, 3), 5);
    EXPECT_EQ(keep_position(OccList{0, 10}, 0, 10, 2), 0);
    EXPECT_EQ(keep_position(OccList{4, 6, 8}, 2, 10, 3), 4);
}

TEST(Scan, AdvanceOnSparse) {
    EXPECT_EQ(advance_on_sparse(occ_a, 4, 10), 10);
    EXPECT_FALSE(advance_on_sparse(occ_a, 20, 10).has_value());
    EXPECT_EQ(advance_on_sparse(OccList{0, 12}, 5, 10), std::nullopt);
    EXPECT_EQ(advance_on_sparse(OccList{0, 16}, 5, 10), 6);
}

TEST(Scan, InitialStart) {
    EXPECT_EQ(initial_start(occ_b, 0, 10, 3), 0);
    EXPECT_EQ(initial_start(OccList{100, 101, 102}, 0, 10, 3), 92);
    EXPECT_FALSE(initial_start(OccList{1, 2}, 0, 10, 3).has_value());
    EXPECT_EQ(initial_start(OccList{100, 101, 102}, 95, 10, 3), 95);
}

TEST(Scan, UnrestrictedRange) {
    EXPECT_EQ(unrestricted_range(10, 25).last, 15);
    EXPECT_EQ(unrestricted_range(10, 25).first, 0);
}

TEST(Scan, MatchesOracleOnRandomLists) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const Case c = random_case(rng);
        const auto expected = oracle::brute_dense_intervals(c.occ, c.window, c.sigma, c.t_max);
        if (c.window > c.t_max) {
            EXPECT_TRUE(expected.empty());
            continue;
        }
        std::vector<StartRange> ranges{unrestricted_range(c.window, c.t_max)};
        ScanStats skip_stats, unit_stats;
        const auto fast = scan(c.occ, c.window, c.sigma, ranges, full_options, &skip_stats);
        const auto unit = scan(c.occ, c.window, c.sigma, ranges, ScanOptions::unit_step(), &unit_stats);
        const auto unrecorded = scan(c.occ, c.window, c.sigma, ranges, no_blocks);
        ASSERT_EQ(fast, expected) << "trial " << trial;
        ASSERT_EQ(unit, expected) << "trial " << trial;
        ASSERT_EQ(unrecorded, expected) << "trial " << trial;
        EXPECT_LE(skip_stats.window_evals, unit_stats.window_evals);
    }
}

TEST(Scan, EmittedIntervalsAreMaximalAndInBounds) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const Case c = random_case(rng);
        if (c.window > c.t_max) continue;
        const StartRange range = unrestricted_range(c.window, c.t_max);
        std::vector<StartRange> ranges{range};
        auto dense = [&](Timestamp l) { return interval_support(c.occ, l, c.window) >= c.sigma; };
        for (const auto& iv : scan(c.occ, c.window, c.sigma, ranges)) {
            EXPECT_GE(iv.e - iv.s, c.window);
            EXPECT_GE(iv.s, 0);
            EXPECT_LE(iv.e, c.t_max);
            for (Timestamp l = iv.s; l <= iv.e - c.window; ++l) ASSERT_TRUE(dense(l));
            if (iv.s - 1 >= range.first) EXPECT_FALSE(dense(iv.s - 1));
            if (iv.e - c.window + 1 <= range.last) EXPECT_FALSE(dense(iv.e - c.window + 1));
        }
    }
}

TEST(Scan, StrideSkipSafety) {
    std::mt19937_64 rng(5);
    std::size_t checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Case c = random_case(rng);
        for (Timestamp l = 0; l <= c.t_max; ++l) {
            const auto cnt = interval_support(c.occ, l, c.window);
            if (cnt < c.sigma) continue;
            const Timestamp keep = keep_position(c.occ, l, c.window, c.sigma);
            ASSERT_GE(keep, l);
            for (Timestamp m = l; m <= keep; ++m) {
                ASSERT_GE(interval_support(c.occ, m, c.window), c.sigma);
            }
            ++checked;
        }
    }
    EXPECT_GT(checked, 0u);
}

TEST(Scan, RestrictedRangesClipRuns) {
    // Dense starts 0..2 and 7; restricting to starts [1, 7] clips the first run.
    const OccList occ{0, 1, 2, 7, 8, 17};
    std::vector<StartRange> ranges{{1, 1}, {7, 7}};
    const IntervalList expected{{1, 11}, {7, 17}};
    EXPECT_EQ(scan(occ, 10, 3, ranges), expected);
    EXPECT_EQ(scan(occ, 10, 3, ranges, ScanOptions::unit_step()), expected);
}
