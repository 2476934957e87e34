#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace densewin;
using densewin::testing::db_from_text;

TEST(TransactionDB, LoadsCommentsAndBlankLines) {
    auto db = db_from_text("# header\n\n0\ta b\n  \n4\tb\n");
    ASSERT_EQ(db.size(), 2u);
    EXPECT_EQ(db.item_count(), 2u);
    EXPECT_EQ(db.t_max(), 4);
    EXPECT_EQ(db.transactions()[0].items, (std::vector<ItemId>{0, 1}));
}

TEST(TransactionDB, EmptyStreamHasNoTmax) {
    auto db = db_from_text("");
    EXPECT_TRUE(db.empty());
    EXPECT_FALSE(db.t_max().has_value());
    auto result = mine(db, MiningParams{10, 1});
    EXPECT_TRUE(result.entries.empty());
}

TEST(TransactionDB, SingleTransactionOccurrence) {
    auto db = db_from_text("0\ta\n");
    auto index = build_item_index(db);
    ASSERT_EQ(index.size(), 1u);
    EXPECT_EQ(index[0], (OccList{0}));
}

TEST(TransactionDB, DuplicateItemsCollapse) {
    auto db = db_from_text("3\ta a b a\n");
    EXPECT_EQ(db.transactions()[0].items.size(), 2u);
}

TEST(TransactionDB, TimestampOnlyLineIsDropped) {
    auto db = db_from_text("1\ta\n2\n3\tb\n");
    EXPECT_EQ(db.size(), 2u);
    EXPECT_EQ(db.dropped_empty(), 1u);
}

TEST(TransactionDB, RejectsDuplicateTimestampWithLineNumber) {
    try {
        db_from_text("# c\n7\ta\n7\tb\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(TransactionDB, RejectsDescendingAndNegativeTimestamps) {
    EXPECT_THROW(db_from_text("5\ta\n4\tb\n"), ParseError);
    EXPECT_THROW(db_from_text("-1\ta\n"), ParseError);
    EXPECT_THROW(db_from_text("x\ta\n"), ParseError);
    EXPECT_THROW(db_from_text("1.5\ta\n"), ParseError);
}

TEST(TransactionDB, MergeDuplicatesUnionsItemsets) {
    auto db = db_from_text("7\ta\n7\tb\n", LoadOptions{true});
    ASSERT_EQ(db.size(), 1u);
    EXPECT_EQ(db.transactions()[0].time, 7);
    EXPECT_EQ(db.transactions()[0].items.size(), 2u);
}

TEST(TransactionDB, CanonicalTextIsFixedPoint) {
    const std::string text = "# x\n10\tz y\n2\tq\n";
    auto db = db_from_text(text, LoadOptions{true});
    const std::string once = to_canonical_text(db);
    const std::string twice = to_canonical_text(db_from_text(once));
    EXPECT_EQ(once, twice);
    auto reloaded = db_from_text(once);
    ASSERT_EQ(reloaded.size(), db.size());
    for (std::size_t i = 0; i < db.size(); ++i) {
        EXPECT_EQ(reloaded.transactions()[i].time, db.transactions()[i].time);
    }
}

TEST(TransactionDB, ConstructorValidates) {
    SymbolTable symbols;
    symbols.intern("a");
    EXPECT_THROW(TransactionDB({{2, {0}}, {2, {0}}}, symbols), std::invalid_argument);
    EXPECT_THROW(TransactionDB({{-1, {0}}}, symbols), std::invalid_argument);
    EXPECT_THROW(TransactionDB({{1, {5}}}, symbols), std::invalid_argument);
}

TEST(MiningParams, Validation) {
    EXPECT_THROW((MiningParams{0, 1}).validate(), std::invalid_argument);
    EXPECT_THROW((MiningParams{1, 0}).validate(), std::invalid_argument);
    EXPECT_NO_THROW((MiningParams{1, 1}).validate());
}

TEST(Pattern, CanonicalOrdering) {
    Pattern a{3, 1, 2, 1};
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a[0], 1u);
    EXPECT_LT(Pattern({9}), Pattern({1, 2}));
    EXPECT_LT(Pattern({1, 2}), Pattern({1, 3}));
    EXPECT_TRUE(Pattern({1, 3}).is_subset_of(a));
    EXPECT_FALSE(Pattern({4}).is_subset_of(a));
    EXPECT_EQ(a.without(1), Pattern({1, 3}));
    EXPECT_EQ(Pattern({1}).extended(4), Pattern({1, 4}));
}

TEST(Mode, RoundTrip) {
    for (Mode m : {Mode::baseline, Mode::intersect, Mode::full}) {
        EXPECT_EQ(parse_mode(to_string(m)), m);
    }
    EXPECT_FALSE(parse_mode("fast").has_value());
}
