#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "densewin/region.hpp"
#include "densewin/scan.hpp"
#include "densewin/transaction_db.hpp"
#include "densewin/types.hpp"

namespace densewin {

struct PatternEntry {
    Pattern pattern;
    IntervalList intervals;

    friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

struct MineCounters {
    std::uint64_t window_evals = 0;
    std::uint64_t candidates_generated = 0;  // after the join
    std::uint64_t candidates_pruned = 0;     // dropped by the subset check
    std::uint64_t empty_occurrences = 0;
    std::uint64_t empty_regions = 0;
    std::uint64_t scans = 0;
};

struct LevelTiming {
    std::size_t k = 0;
    std::size_t candidates = 0;
    std::size_t dense = 0;
    double ms = 0.0;
};

struct MiningResult {
    MiningParams params;
    std::optional<Timestamp> t_max;
    /// Canonical (length, lexicographic item id) order.
    std::vector<PatternEntry> entries;
    MineCounters counters;
    std::vector<LevelTiming> levels;

    const PatternEntry* find(const Pattern& p) const;
    /// Pattern counts indexed by length (index 0 unused).
    std::vector<std::size_t> counts_by_length() const;
};

/// One level of the search: size-k dense patterns with their occurrence and
/// dense-interval lists, sorted canonically.
struct Level {
    std::size_t k = 0;
    std::vector<Pattern> patterns;
    std::vector<OccList> occurrences;
    std::vector<IntervalList> intervals;

    std::size_t size() const noexcept { return patterns.size(); }
};

struct Candidate {
    Pattern pattern;
    std::size_t left = 0;   // index in the previous level
    std::size_t right = 0;  // index in the previous level
};

/// Pairs of previous-level patterns sharing all but the last item. Sorted and
/// duplicate-free because the previous level is sorted.
std::vector<Candidate> apriori_join(const Level& prev);

/// Keeps candidates all of whose (k-1)-subsets appear in `prev`.
std::vector<Candidate> prune_subsets(std::vector<Candidate> candidates, const Level& prev);

/// Window-start ranges for `pattern` from its items' singleton dense regions,
/// keeping components with e - s >= W. Empty means the pattern is pruned.
std::vector<StartRange> cand_ranges(const Pattern& pattern,
                                    std::span<const Region> singleton_regions,
                                    Timestamp window);

struct MineOptions {
    std::size_t threads = 1;
};

/// Exact dense-pattern mining. Throws std::invalid_argument on bad params.
MiningResult mine(const TransactionDB& db, const MiningParams& params,
                  const MineOptions& options = {});

}  // namespace densewin
