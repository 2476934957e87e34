#include "densewin/miner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "densewin/occ.hpp"

namespace densewin {

const PatternEntry* MiningResult::find(const Pattern& p) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), p,
                               [](const PatternEntry& e, const Pattern& q) { return e.pattern < q; });
    if (it != entries.end() && it->pattern == p) return &*it;
    return nullptr;
}

std::vector<std::size_t> MiningResult::counts_by_length() const {
    std::vector<std::size_t> counts(1, 0);
    for (const auto& e : entries) {
        if (counts.size() <= e.pattern.size()) counts.resize(e.pattern.size() + 1, 0);
        ++counts[e.pattern.size()];
    }
    return counts;
}

std::vector<Candidate> apriori_join(const Level& prev) {
    std::vector<Candidate> out;
    const auto& pats = prev.patterns;
    std::size_t group_begin = 0;
    while (group_begin < pats.size()) {
        // Patterns sharing all but the last item are contiguous.
        std::size_t group_end = group_begin + 1;
        auto prefix = pats[group_begin].items().first(pats[group_begin].size() - 1);
        while (group_end < pats.size()) {
            auto other = pats[group_end].items().first(pats[group_end].size() - 1);
            if (!std::equal(prefix.begin(), prefix.end(), other.begin(), other.end())) break;
            ++group_end;
        }
        for (std::size_t i = group_begin; i < group_end; ++i) {
            for (std::size_t j = i + 1; j < group_end; ++j) {
                out.push_back({pats[i].extended(pats[j].back()), i, j});
            }
        }
        group_begin = group_end;
    }
    return out;
}

std::vector<Candidate> prune_subsets(std::vector<Candidate> candidates, const Level& prev) {
    const auto& pats = prev.patterns;
    auto present = [&](const Pattern& p) { return std::binary_search(pats.begin(), pats.end(), p); };
    std::erase_if(candidates, [&](const Candidate& c) {
        const std::size_t k = c.pattern.size();
        for (std::size_t drop = 0; drop < k; ++drop) {
            if (!present(c.pattern.without(drop))) return true;
        }
        return false;
    });
    return candidates;
}

std::vector<StartRange> cand_ranges(const Pattern& pattern,
                                    std::span<const Region> singleton_regions, Timestamp window) {
    std::vector<Region> regions;
    regions.reserve(pattern.size());
    for (ItemId x : pattern.items()) regions.push_back(singleton_regions[x]);
    Region common = region_intersect(regions);

    std::vector<StartRange> ranges;
    for (const auto& c : common.components()) {
        if (c.e - c.s >= window) ranges.push_back({c.s, c.e - window});
    }
    return ranges;
}

namespace {

using Clock = std::chrono::steady_clock;

ScanOptions scan_options_for(Mode mode) {
    return mode == Mode::full ? ScanOptions{} : ScanOptions::unit_step();
}

// Runs body(i) for i in [0, n) on up to `threads` workers.
template <typename Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
}

struct CandidateOutcome {
    OccList occ;
    IntervalList intervals;
    ScanStats stats;
    bool empty_occ = false;
    bool empty_region = false;
    bool scanned = false;
};

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

MiningResult mine(const TransactionDB& db, const MiningParams& params, const MineOptions& options) {
    params.validate();
    MiningResult result;
    result.params = params;
    result.t_max = db.t_max();
    if (!result.t_max || params.window > *result.t_max) return result;

    const Timestamp W = params.window;
    const std::int64_t sigma = params.sigma;
    const ScanOptions scan_opts = scan_options_for(params.mode);
    const StartRange unrestricted = unrestricted_range(W, *result.t_max);
    auto& counters = result.counters;

    // Level 1: every item over the unrestricted range.
    auto level_started = Clock::now();
    std::vector<OccList> item_occ = build_item_index(db);
    std::vector<IntervalList> item_di(item_occ.size());
    std::vector<ScanStats> item_stats(item_occ.size());
    parallel_for(item_occ.size(), options.threads, [&](std::size_t x) {
        item_di[x] = scan(item_occ[x], W, sigma, std::span(&unrestricted, 1), scan_opts, &item_stats[x]);
    });

    Level level;
    level.k = 1;
    std::vector<Region> singleton_regions(item_occ.size());
    for (std::size_t x = 0; x < item_occ.size(); ++x) {
        counters.window_evals += item_stats[x].window_evals;
        ++counters.scans;
        if (item_di[x].empty()) continue;
        singleton_regions[x] = Region(item_di[x]);
        level.patterns.push_back(Pattern{static_cast<ItemId>(x)});
        level.occurrences.push_back(item_occ[x]);
        level.intervals.push_back(item_di[x]);
    }
    result.levels.push_back({1, item_occ.size(), level.size(), elapsed_ms(level_started)});
    auto emit = [&](const Level& lv) {
        for (std::size_t i = 0; i < lv.size(); ++i) {
            result.entries.push_back({lv.patterns[i], lv.intervals[i]});
        }
    };
    emit(level);

    while (!level.patterns.empty()) {
        const std::size_t k = level.k + 1;
        if (params.k_max && k > *params.k_max) break;
        level_started = Clock::now();

        auto joined = apriori_join(level);
        const std::size_t generated = joined.size();
        auto candidates = prune_subsets(std::move(joined), level);
        counters.candidates_generated += generated;
        counters.candidates_pruned += generated - candidates.size();

        std::vector<CandidateOutcome> outcomes(candidates.size());
        parallel_for(candidates.size(), options.threads, [&](std::size_t i) {
            const Candidate& c = candidates[i];
            CandidateOutcome& o = outcomes[i];
            o.occ = occ_intersect(level.occurrences[c.left], level.occurrences[c.right]);
            if (o.occ.empty()) {
                o.empty_occ = true;
                return;
            }
            std::vector<StartRange> ranges;
            if (params.mode == Mode::baseline) {
                ranges.push_back(unrestricted);
            } else {
                ranges = cand_ranges(c.pattern, singleton_regions, W);
                if (ranges.empty()) {
                    o.empty_region = true;
                    return;
                }
            }
            o.scanned = true;
            o.intervals = scan(o.occ, W, sigma, ranges, scan_opts, &o.stats);
        });

        Level next;
        next.k = k;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            auto& o = outcomes[i];
            counters.window_evals += o.stats.window_evals;
            counters.empty_occurrences += o.empty_occ;
            counters.empty_regions += o.empty_region;
            counters.scans += o.scanned;
            if (o.intervals.empty()) continue;
            next.patterns.push_back(std::move(candidates[i].pattern));
            next.occurrences.push_back(std::move(o.occ));
            next.intervals.push_back(std::move(o.intervals));
        }
        result.levels.push_back({k, candidates.size(), next.size(), elapsed_ms(level_started)});
        emit(next);
        level = std::move(next);
    }
    return result;
}

}  // namespace densewin
