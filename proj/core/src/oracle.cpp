#include "densewin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace densewin::oracle {

IntervalList brute_dense_intervals(OccView occ, Timestamp window, std::int64_t sigma,
                                   Timestamp t_max) {
    IntervalList out;
    if (window > t_max) return out;
    const Timestamp last_start = t_max - window;

    bool in_run = false;
    Timestamp run_first = 0;
    for (Timestamp l = 0; l <= last_start; ++l) {
        std::int64_t count = 0;
        for (Timestamp t : occ) {
            if (l <= t && t <= l + window) ++count;
        }
        const bool dense = count >= sigma;
        if (dense && !in_run) {
            in_run = true;
            run_first = l;
        } else if (!dense && in_run) {
            in_run = false;
            out.push_back({run_first, l - 1 + window});
        }
    }
    if (in_run) out.push_back({run_first, last_start + window});
    return out;
}

MiningResult brute_mine(const TransactionDB& db, Timestamp window, std::int64_t sigma,
                        std::optional<std::size_t> k_max, std::size_t item_bound) {
    MiningResult result;
    result.params = MiningParams{window, sigma, k_max, Mode::full};
    result.params.validate();
    result.t_max = db.t_max();
    if (!result.t_max) return result;

    const std::size_t n_items = db.item_count();
    if (n_items > item_bound || n_items >= 63) {
        throw EnumerationLimit("brute_mine: " + std::to_string(n_items) +
                               " distinct items exceed the enumeration bound of " +
                               std::to_string(item_bound));
    }

    // Each transaction as a bitmask of its items.
    std::vector<std::uint64_t> masks;
    std::vector<Timestamp> times;
    for (const auto& tx : db.transactions()) {
        std::uint64_t m = 0;
        for (ItemId id : tx.items) m |= std::uint64_t{1} << id;
        masks.push_back(m);
        times.push_back(tx.time);
    }

    const std::uint64_t limit = std::uint64_t{1} << n_items;
    for (std::uint64_t subset = 1; subset < limit; ++subset) {
        const auto k = static_cast<std::size_t>(std::popcount(subset));
        if (k_max && k > *k_max) continue;
        OccList occ;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if ((masks[i] & subset) == subset) occ.push_back(times[i]);
        }
        if (occ.empty()) continue;
        auto intervals = brute_dense_intervals(occ, window, sigma, *result.t_max);
        if (intervals.empty()) continue;
        std::vector<ItemId> items;
        for (ItemId id = 0; id < n_items; ++id) {
            if (subset >> id & 1) items.push_back(id);
        }
        result.entries.push_back({Pattern(std::move(items)), std::move(intervals)});
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const PatternEntry& a, const PatternEntry& b) { return a.pattern < b.pattern; });
    return result;
}

TransactionDB random_db(std::uint64_t seed, const RandomCheckConfig& config) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };

    const auto n_items = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(config.max_items)));
    const auto max_tx = std::min<std::int64_t>(static_cast<std::int64_t>(config.max_transactions),
                                               config.max_time + 1);
    const auto n_tx = static_cast<std::size_t>(pick(1, max_tx));
    const Timestamp horizon = pick(static_cast<std::int64_t>(n_tx) - 1, config.max_time);

    // Distinct timestamps in [0, horizon].
    std::vector<Timestamp> times(static_cast<std::size_t>(horizon) + 1);
    for (std::size_t i = 0; i < times.size(); ++i) times[i] = static_cast<Timestamp>(i);
    std::shuffle(times.begin(), times.end(), rng);
    times.resize(n_tx);
    std::sort(times.begin(), times.end());

    // Per-item inclusion probabilities keep some itemsets frequent. A burst
    // window boosts inclusion to create local density.
    std::vector<double> prob(n_items);
    for (auto& p : prob) p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Timestamp burst_lo = pick(0, horizon);
    const Timestamp burst_hi = burst_lo + pick(0, horizon / 2 + 1);

    SymbolTable symbols;
    for (std::size_t i = 0; i < n_items; ++i) symbols.intern(std::string(1, static_cast<char>('a' + i)));
    std::vector<Transaction> txs;
    for (Timestamp t : times) {
        Transaction tx{t, {}};
        const bool burst = burst_lo <= t && t <= burst_hi;
        for (std::size_t i = 0; i < n_items; ++i) {
            double p = burst ? std::min(1.0, prob[i] + 0.3) : prob[i] * 0.6;
            if (std::bernoulli_distribution(p)(rng)) tx.items.push_back(static_cast<ItemId>(i));
        }
        if (tx.items.empty()) tx.items.push_back(static_cast<ItemId>(pick(0, static_cast<std::int64_t>(n_items) - 1)));
        txs.push_back(std::move(tx));
    }
    return TransactionDB(std::move(txs), std::move(symbols));
}

namespace {

constexpr Mode all_modes[] = {Mode::baseline, Mode::intersect, Mode::full};

std::optional<Mismatch> first_mismatch(const TransactionDB& db, Timestamp window,
                                       std::int64_t sigma, std::optional<std::size_t> k_max,
                                       const MinerFn& miner, std::size_t* comparisons) {
    MiningResult expected = brute_mine(db, window, sigma, k_max);
    for (Mode mode : all_modes) {
        MiningParams params{window, sigma, k_max, mode};
        MiningResult actual = miner(db, params);
        if (comparisons) ++*comparisons;
        if (actual.entries != expected.entries) {
            return Mismatch{db, params, std::move(expected), std::move(actual)};
        }
    }
    return std::nullopt;
}

bool still_fails(const TransactionDB& db, const MiningParams& params, const MinerFn& miner) {
    if (db.empty()) return false;
    MiningResult expected = brute_mine(db, params.window, params.sigma, params.k_max);
    return miner(db, params).entries != expected.entries;
}

// Rebuilds a database from a subset of transactions, re-interning items so
// that unused tokens disappear.
TransactionDB rebuild(const TransactionDB& db, const std::vector<Transaction>& txs) {
    SymbolTable symbols;
    std::vector<Transaction> out;
    for (const auto& tx : txs) {
        Transaction copy{tx.time, {}};
        for (ItemId id : tx.items) copy.items.push_back(symbols.intern(db.symbols().token(id)));
        out.push_back(std::move(copy));
    }
    return TransactionDB(std::move(out), std::move(symbols));
}

}  // namespace

CheckReport check_database(const TransactionDB& db, Timestamp window, std::int64_t sigma,
                           std::optional<std::size_t> k_max, const MinerFn& miner) {
    CheckReport report;
    report.trials = 1;
    report.counterexample = first_mismatch(db, window, sigma, k_max, miner, &report.comparisons);
    return report;
}

CheckReport check_random(const RandomCheckConfig& config, const MinerFn& miner) {
    CheckReport report;
    std::mt19937_64 param_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        TransactionDB db = random_db(config.seed * 1'000'003 + trial, config);
        const Timestamp window =
            std::uniform_int_distribution<Timestamp>(1, config.max_window)(param_rng);
        const std::int64_t sigma =
            std::uniform_int_distribution<std::int64_t>(1, config.max_sigma)(param_rng);
        ++report.trials;
        if (auto m = first_mismatch(db, window, sigma, std::nullopt, miner, &report.comparisons)) {
            report.counterexample = shrink(std::move(*m), miner);
            break;
        }
    }
    return report;
}

Mismatch shrink(Mismatch m, const MinerFn& miner) {
    bool progress = true;
    while (progress) {
        progress = false;
        const auto& txs = m.db.transactions();
        // Drop whole transactions.
        for (std::size_t i = 0; i < txs.size() && !progress; ++i) {
            std::vector<Transaction> fewer = txs;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            TransactionDB candidate = rebuild(m.db, fewer);
            if (still_fails(candidate, m.params, miner)) {
                m.db = std::move(candidate);
                progress = true;
            }
        }
        // Drop single items from transactions.
        for (std::size_t i = 0; i < m.db.size() && !progress; ++i) {
            const auto& tx = m.db.transactions()[i];
            if (tx.items.size() < 2) continue;
            for (std::size_t j = 0; j < tx.items.size() && !progress; ++j) {
                std::vector<Transaction> smaller = m.db.transactions();
                smaller[i].items.erase(smaller[i].items.begin() + static_cast<std::ptrdiff_t>(j));
                TransactionDB candidate = rebuild(m.db, smaller);
                if (still_fails(candidate, m.params, miner)) {
                    m.db = std::move(candidate);
                    progress = true;
                }
            }
        }
    }
    m.expected = brute_mine(m.db, m.params.window, m.params.sigma, m.params.k_max);
    m.actual = miner(m.db, m.params);
    return m;
}

namespace {

void dump_entries(std::ostream& out, const MiningResult& r, const SymbolTable& symbols) {
    for (const auto& e : r.entries) {
        out << "  {";
        for (std::size_t i = 0; i < e.pattern.size(); ++i) {
            out << (i ? "," : "") << symbols.token(e.pattern[i]);
        }
        out << "}:";
        for (const auto& iv : e.intervals) out << " [" << iv.s << "," << iv.e << "]";
        out << '\n';
    }
}

}  // namespace

std::string describe(const Mismatch& m) {
    std::ostringstream out;
    out << "mismatch: W=" << m.params.window << " sigma=" << m.params.sigma
        << " mode=" << to_string(m.params.mode) << "\n";
    out << "database:\n" << to_canonical_text(m.db);
    out << "expected (brute force):\n";
    dump_entries(out, m.expected, m.db.symbols());
    out << "actual:\n";
    dump_entries(out, m.actual, m.db.symbols());
    return out.str();
}

}  // namespace densewin::oracle
