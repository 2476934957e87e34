#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "densewin/miner.hpp"
#include "densewin/transaction_db.hpp"
#include "densewin/types.hpp"

// Brute-force references. Nothing in here reuses the scan or miner code paths.
namespace densewin::oracle {

/// Counts every integer start in [0, t_max - W] directly and emits each
/// maximal run of dense starts [a, b] as [a, b + W].
IntervalList brute_dense_intervals(OccView occ, Timestamp window, std::int64_t sigma,
                                   Timestamp t_max);

class EnumerationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_item_bound = 16;

/// Enumerates every itemset over the database's items (up to k_max) and keeps
/// the dense ones. Throws EnumerationLimit when the item count exceeds
/// `item_bound`.
MiningResult brute_mine(const TransactionDB& db, Timestamp window, std::int64_t sigma,
                        std::optional<std::size_t> k_max = std::nullopt,
                        std::size_t item_bound = default_item_bound);

using MinerFn = std::function<MiningResult(const TransactionDB&, const MiningParams&)>;

struct RandomCheckConfig {
    std::size_t trials = 1000;
    std::size_t max_items = 8;
    std::size_t max_transactions = 60;
    Timestamp max_time = 300;
    Timestamp max_window = 50;
    std::int64_t max_sigma = 6;
    std::uint64_t seed = 1;
};

struct Mismatch {
    TransactionDB db;
    MiningParams params;
    MiningResult expected;
    MiningResult actual;
};

struct CheckReport {
    std::size_t trials = 0;
    std::size_t comparisons = 0;
    std::optional<Mismatch> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Random database drawn with the bounds in `config`.
TransactionDB random_db(std::uint64_t seed, const RandomCheckConfig& config);

/// Runs `miner` in all three modes against brute_mine on random instances and
/// stops at the first mismatch, shrunk to a smaller failing database.
CheckReport check_random(const RandomCheckConfig& config, const MinerFn& miner);

/// Compares `miner` in all three modes with brute_mine on one database.
CheckReport check_database(const TransactionDB& db, Timestamp window, std::int64_t sigma,
                           std::optional<std::size_t> k_max, const MinerFn& miner);

/// Greedily removes transactions and items while the mismatch persists.
Mismatch shrink(Mismatch m, const MinerFn& miner);

/// Human-readable dump of a mismatch (database in canonical text).
std::string describe(const Mismatch& m);

}  // namespace densewin::oracle
