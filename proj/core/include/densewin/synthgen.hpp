#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "densewin/transaction_db.hpp"
#include "densewin/types.hpp"

namespace densewin::synth {

struct GenParams {
    std::size_t transactions = 100'000;  // T
    std::size_t items = 10'000;          // I
    double mean_length = 5.0;            // B
    std::size_t n_patterns = 50;
    std::size_t pattern_len = 5;
    Timestamp interval_len = 10'000;
    std::size_t intervals_per_pattern = 1;
    std::size_t occ_per_interval = 100;
    Timestamp gap_lo = 5;
    Timestamp gap_hi = 10;
    std::uint64_t seed = 1;

    std::size_t reserved_items() const noexcept { return n_patterns * pattern_len; }
    std::size_t placements() const noexcept { return n_patterns * intervals_per_pattern; }

    /// Throws std::invalid_argument describing the first infeasible setting.
    void validate() const;
};

struct PlantedPattern {
    std::vector<ItemId> items;
    IntervalList intervals;
};

struct GroundTruth {
    std::vector<PlantedPattern> planted;
    /// Dense subpatterns of length >= 2 implied by the planted patterns.
    std::size_t expected_len_ge2 = 0;
    /// Including singletons.
    std::size_t expected_total = 0;
};

struct Generated {
    TransactionDB db;
    GroundTruth truth;
};

/// Background transactions plus planted dense patterns. Deterministic per
/// params (including seed). Item tokens are the decimal item ids; the planted
/// patterns use the top `reserved_items()` ids exclusively.
Generated generate(const GenParams& params);

/// Canonical JSON with the same pattern layout as mining results, plus
/// "expected_len_ge2" and "expected_total".
void write_ground_truth(const GroundTruth& truth, const TransactionDB& db,
                        const GenParams& params, std::ostream& out);

/// Counter-based portable RNG stream (SplitMix64 seeding a xoshiro256**).
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t purpose);

    std::uint64_t next();
    /// Uniform integer in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    /// Uniform double in [0, 1).
    double unit();
    /// Standard normal (Marsaglia polar method).
    double normal();

private:
    std::uint64_t s_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace densewin::synth
