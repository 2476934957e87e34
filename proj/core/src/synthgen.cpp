#include "densewin/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>
#include <unordered_set>

#include "densewin/result_io.hpp"

namespace densewin::synth {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// One substream per purpose so that changing how one quantity is drawn does
// not perturb the others.
enum Purpose : std::uint64_t { lengths = 1, items = 2, gaps = 3, placement = 4 };

}  // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t purpose) {
    std::uint64_t state = seed ^ (purpose * 0xd1b54a32d192ed03ULL);
    for (auto& s : s_) s = splitmix64(state);
}

std::uint64_t Stream::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Stream::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return next();
    const std::uint64_t threshold = (0 - range) % range;
    while (true) {
        std::uint64_t r = next();
        if (r >= threshold) return lo + r % range;
    }
}

double Stream::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Stream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * unit() - 1.0;
        v = 2.0 * unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

void GenParams::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (transactions == 0 || items == 0 || n_patterns == 0 || pattern_len == 0 ||
        intervals_per_pattern == 0 || occ_per_interval == 0) {
        fail("all counts must be positive");
    }
    if (!(mean_length >= 0.0) || !std::isfinite(mean_length)) fail("mean basket length must be >= 0");
    if (pattern_len > 62) fail("pattern length must be <= 62");
    if (items <= reserved_items()) {
        fail("item universe (" + std::to_string(items) + ") must exceed n_patterns * pattern_len (" +
             std::to_string(reserved_items()) + ")");
    }
    if (transactions < placements() * occ_per_interval) {
        fail("timeline too short: " + std::to_string(transactions) +
             " transactions cannot hold " + std::to_string(placements()) + " placements of " +
             std::to_string(occ_per_interval) + " occurrences");
    }
    if (occ_per_interval < 2) fail("occurrences per interval must be >= 2");
    if (interval_len < static_cast<Timestamp>(occ_per_interval) - 1) {
        fail("interval length too short for distinct timestamps of every occurrence");
    }
    if (gap_lo < 1 || gap_lo > gap_hi) fail("background gaps need 1 <= gap_lo <= gap_hi");
}

Generated generate(const GenParams& params) {
    params.validate();

    Stream length_rng(params.seed, lengths);
    Stream item_rng(params.seed, items);
    Stream gap_rng(params.seed, gaps);
    Stream placement_rng(params.seed, placement);

    const std::size_t reserved = params.reserved_items();
    const std::size_t pool = params.items - reserved;  // background items are 0..pool-1
    const std::size_t n_place = params.placements();
    const std::size_t n_background = params.transactions - n_place * params.occ_per_interval;
    const double sd = std::max(1.0, params.mean_length / 3.0);

    // Placement order: a shuffled pattern order repeated, so each pattern's
    // placements are spread evenly over the timeline.
    std::vector<std::size_t> order(params.n_patterns);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[placement_rng.uniform(0, i - 1)]);
    }

    auto background_items = [&] {
        double draw = std::round(params.mean_length + sd * length_rng.normal());
        auto len = static_cast<std::size_t>(std::clamp(draw, 0.0, static_cast<double>(pool)));
        // Floyd's sampling without replacement.
        std::unordered_set<std::uint64_t> chosen;
        std::vector<std::uint64_t> picked;
        picked.reserve(len);
        for (std::uint64_t j = pool - len; j < pool; ++j) {
            std::uint64_t t = item_rng.uniform(0, j);
            if (!chosen.insert(t).second) {
                chosen.insert(j);
                t = j;
            }
            picked.push_back(t);
        }
        std::sort(picked.begin(), picked.end());
        return picked;
    };

    struct RawTx {
        Timestamp time;
        std::vector<std::uint64_t> items;
    };
    std::vector<RawTx> raw;
    raw.reserve(params.transactions);

    GroundTruth truth;
    truth.planted.resize(params.n_patterns);
    for (std::size_t p = 0; p < params.n_patterns; ++p) {
        for (std::size_t i = 0; i < params.pattern_len; ++i) {
            truth.planted[p].items.push_back(static_cast<ItemId>(pool + p * params.pattern_len + i));
        }
    }

    Timestamp clock = 0;
    bool first = true;
    auto advance = [&] {
        if (first) {
            first = false;
        } else {
            clock += static_cast<Timestamp>(gap_rng.uniform(static_cast<std::uint64_t>(params.gap_lo),
                                                            static_cast<std::uint64_t>(params.gap_hi)));
        }
    };
    auto emit_background = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            auto items = background_items();
            if (items.empty()) continue;  // zero-length draws are dropped
            advance();
            raw.push_back({clock, std::move(items)});
        }
    };

    const std::size_t segments = n_place + 1;
    const auto occ = static_cast<Timestamp>(params.occ_per_interval);
    for (std::size_t seg = 0; seg < segments; ++seg) {
        emit_background(n_background * (seg + 1) / segments - n_background * seg / segments);
        if (seg == n_place) break;

        auto& planted = truth.planted[order[seg % params.n_patterns]];
        advance();
        const Timestamp start = clock;
        for (Timestamp i = 0; i < occ; ++i) {
            auto items = background_items();
            for (ItemId x : planted.items) items.push_back(x);
            std::sort(items.begin(), items.end());
            raw.push_back({start + i * params.interval_len / (occ - 1), std::move(items)});
        }
        clock = start + params.interval_len;
        planted.intervals.push_back({start, clock});
    }

    // Intern in order of first appearance so the database serializes
    // canonically.
    SymbolTable symbols;
    std::vector<Transaction> txs;
    txs.reserve(raw.size());
    for (auto& r : raw) {
        Transaction tx{r.time, {}};
        tx.items.reserve(r.items.size());
        for (auto x : r.items) tx.items.push_back(symbols.intern(std::to_string(x)));
        txs.push_back(std::move(tx));
    }
    for (auto& planted : truth.planted) {
        for (auto& x : planted.items) x = *symbols.find(std::to_string(x));
        std::sort(planted.items.begin(), planted.items.end());
    }

    const std::size_t len = params.pattern_len;
    truth.expected_len_ge2 = params.n_patterns * ((std::size_t{1} << len) - len - 1);
    truth.expected_total = truth.expected_len_ge2 + params.n_patterns * len;
    return {TransactionDB(std::move(txs), std::move(symbols)), std::move(truth)};
}

void write_ground_truth(const GroundTruth& truth, const TransactionDB& db, const GenParams& params,
                        std::ostream& out) {
    nlohmann::ordered_json p = {
        {"T", params.transactions},
        {"I", params.items},
        {"B", params.mean_length},
        {"n_patterns", params.n_patterns},
        {"pattern_len", params.pattern_len},
        {"interval_len", params.interval_len},
        {"intervals_per_pattern", params.intervals_per_pattern},
        {"occ_per_interval", params.occ_per_interval},
        {"gap_lo", params.gap_lo},
        {"gap_hi", params.gap_hi},
        {"seed", params.seed},
    };
    std::vector<TokenEntry> entries;
    for (const auto& planted : truth.planted) {
        TokenEntry e;
        for (ItemId x : planted.items) e.items.push_back(db.symbols().token(x));
        e.intervals = planted.intervals;
        entries.push_back(std::move(e));
    }
    nlohmann::ordered_json extra = {{"expected_len_ge2", truth.expected_len_ge2},
                                    {"expected_total", truth.expected_total}};
    write_pattern_file(out, p.dump(), db.t_max(), std::move(entries), extra.dump());
}

}  // namespace densewin::synth
