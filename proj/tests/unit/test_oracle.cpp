#include <gtest/gtest.h>

#include "densewin/oracle.hpp"
#include "helpers.hpp"

using namespace densewin;
using namespace densewin::oracle;

TEST(Oracle, BruteDenseIntervalsRunningExample) {
    const OccList occ_b{1, 3, 5, 7, 9, 20, 22, 25};
    EXPECT_EQ(brute_dense_intervals(occ_b, 10, 3, 25), (IntervalList{{0, 15}, {15, 25}}));
    EXPECT_TRUE(brute_dense_intervals(occ_b, 30, 1, 25).empty());
    EXPECT_TRUE(brute_dense_intervals({}, 5, 1, 25).empty());
}

TEST(Oracle, BruteMineRunningExample) {
    const auto db = densewin::testing::running_example();
    const auto expected = brute_mine(db, 10, 3);
    EXPECT_EQ(expected.entries.size(), 5u);
    EXPECT_EQ(mine(db, MiningParams{10, 3}).entries, expected.entries);
}

TEST(Oracle, RefusesLargeUniverses) {
    const auto db = densewin::testing::db_from_text("1\ta b c d\n");
    EXPECT_THROW(brute_mine(db, 1, 1, std::nullopt, 3), EnumerationLimit);
}

TEST(Oracle, RandomCheckPasses) {
    RandomCheckConfig config;
    config.trials = 200;
    config.seed = 77;
    const auto report = check_random(config, [](const TransactionDB& db, const MiningParams& p) {
        return mine(db, p);
    });
    EXPECT_TRUE(report.passed()) << describe(*report.counterexample);
    EXPECT_EQ(report.trials, 200u);
    EXPECT_EQ(report.comparisons, 600u);
}

TEST(Oracle, InjectedFaultIsCaughtAndShrunk) {
    RandomCheckConfig config;
    config.trials = 500;
    const auto faulty = [](const TransactionDB& db, const MiningParams& p) {
        MiningParams q = p;
        q.window += 1;
        return mine(db, q);
    };
    const auto report = check_random(config, faulty);
    ASSERT_FALSE(report.passed());
    const auto& m = *report.counterexample;
    EXPECT_NE(m.expected.entries, m.actual.entries);
    EXPECT_LE(m.db.size(), 5u);
    EXPECT_FALSE(describe(m).empty());
}

TEST(Oracle, RandomDbRespectsBounds) {
    RandomCheckConfig config;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto db = random_db(seed, config);
        EXPECT_LE(db.item_count(), config.max_items);
        EXPECT_LE(db.size(), config.max_transactions);
        if (db.t_max()) {
            EXPECT_LE(*db.t_max(), config.max_time);
        }
    }
}
