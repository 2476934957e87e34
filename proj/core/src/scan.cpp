#include "densewin/scan.hpp"

#include <algorithm>
#include <cassert>

#include "densewin/occ.hpp"

namespace densewin {

namespace {

// Window counting cursors. Window starts are evaluated in increasing order
// within one scan call, so both bounds only move forward.
class WindowCounter {
public:
    WindowCounter(OccView occ, Timestamp window) : occ_(occ), window_(window) {}

    // Binary search forward from the previous position.
    void seek(Timestamp l) {
        lo_ = static_cast<std::size_t>(
            std::lower_bound(occ_.begin() + lo_, occ_.end(), l) - occ_.begin());
        hi_ = std::max(hi_, lo_);
        hi_ = static_cast<std::size_t>(
            std::upper_bound(occ_.begin() + hi_, occ_.end(), l + window_) - occ_.begin());
    }

    // Linear walk; amortized O(1) per unit step.
    void step_to(Timestamp l) {
        while (lo_ < occ_.size() && occ_[lo_] < l) ++lo_;
        hi_ = std::max(hi_, lo_);
        while (hi_ < occ_.size() && occ_[hi_] <= l + window_) ++hi_;
    }

    std::int64_t count() const { return static_cast<std::int64_t>(hi_ - lo_); }
    std::size_t lo() const { return lo_; }
    std::size_t hi() const { return hi_; }

private:
    OccView occ_;
    Timestamp window_;
    std::size_t lo_ = 0;
    std::size_t hi_ = 0;
};

// Window-start runs [a, b] registered so far, in increasing order.
class RecordedBlocks {
public:
    void add(Timestamp a, Timestamp b) { blocks_.push_back({a, b}); }

    // End of the block containing l, if any. Queries must be non-decreasing.
    std::optional<Timestamp> covering(Timestamp l) {
        while (cursor_ < blocks_.size() && blocks_[cursor_].last < l) ++cursor_;
        if (cursor_ < blocks_.size() && blocks_[cursor_].first <= l) return blocks_[cursor_].last;
        return std::nullopt;
    }

private:
    std::vector<StartRange> blocks_;
    std::size_t cursor_ = 0;
};

// Unit-step sliding over one start range: every start in [first, last] not
// inside a recorded block gets its own window count.
void unit_step_range(OccView occ, Timestamp window, std::int64_t sigma, StartRange range,
                     RecordedBlocks* recorded, std::size_t& lo, std::size_t& hi,
                     IntervalList& out, ScanStats& stats) {
    const std::size_t n = occ.size();
    const auto need = static_cast<std::size_t>(sigma);
    Timestamp l = range.first;
    bool in_dense = false;
    Timestamp run_start = 0;
    Timestamp run_last = 0;

    while (l <= range.last) {
        if (recorded) {
            if (auto end = recorded->covering(l)) {
                ++stats.block_skips;
                l = *end + 1;
                continue;
            }
        }
        // Ranges are sorted and disjoint, so no block recorded earlier can
        // start inside the rest of this range.
        for (; l <= range.last; ++l) {
            while (lo < n && occ[lo] < l) ++lo;
            if (hi < lo) hi = lo;
            while (hi < n && occ[hi] <= l + window) ++hi;
            ++stats.window_evals;
            const bool dense = hi - lo >= need;
            if (dense) {
                if (!in_dense) {
                    run_start = l;
                    in_dense = true;
                }
                run_last = l;
            } else if (in_dense) {
                out.push_back({run_start, run_last + window});
                if (recorded) recorded->add(run_start, run_last);
                in_dense = false;
            }
        }
    }
    if (in_dense) {
        out.push_back({run_start, run_last + window});
        if (recorded) recorded->add(run_start, run_last);
    }
}

}  // namespace

Timestamp keep_position(OccView occ, Timestamp l, Timestamp window, std::int64_t sigma) {
    std::size_t lo = lower_index(occ, l);
    std::int64_t cnt = interval_support(occ, l, window);
    assert(cnt >= sigma && "keep_position requires a dense window");
    return occ[lo + static_cast<std::size_t>(cnt - sigma)];
}

std::optional<Timestamp> advance_on_sparse(OccView occ, Timestamp l, Timestamp window) {
    std::size_t next = upper_index(occ, l + window);
    if (next == occ.size()) return std::nullopt;
    return std::max(l + 1, occ[next] - window);
}

std::optional<Timestamp> initial_start(OccView occ, Timestamp range_first, Timestamp window,
                                       std::int64_t sigma) {
    std::size_t j = lower_index(occ, range_first);
    std::size_t needed = j + static_cast<std::size_t>(sigma) - 1;
    if (needed >= occ.size()) return std::nullopt;
    return std::max(range_first, std::max<Timestamp>(0, occ[needed] - window));
}

StartRange unrestricted_range(Timestamp window, Timestamp t_max) {
    return {0, std::max<Timestamp>(0, t_max - window)};
}

IntervalList scan(OccView occ, Timestamp window, std::int64_t sigma,
                  std::span<const StartRange> ranges, const ScanOptions& options,
                  ScanStats* stats) {
    IntervalList out;
    if (occ.empty() || ranges.empty() || sigma < 1) return out;
    if (options.sparse_skip && occ.size() < static_cast<std::size_t>(sigma)) return out;

    ScanStats local;
    WindowCounter counter(occ, window);
    RecordedBlocks recorded;
    const bool unit_step = !options.stride_skip && !options.sparse_skip;

    if (unit_step) {
        std::size_t lo = 0;
        std::size_t hi = 0;
        for (const StartRange& range : ranges) {
            unit_step_range(occ, window, sigma, range, options.recorded_blocks ? &recorded : nullptr,
                            lo, hi, out, local);
        }
        if (stats) *stats += local;
        return out;
    }

    for (const StartRange& range : ranges) {
        Timestamp l = range.first;
        if (options.sparse_skip) {
            auto first = initial_start(occ, range.first, window, sigma);
            if (!first) continue;
            l = *first;
        }

        bool in_dense = false;
        Timestamp run_start = 0;
        Timestamp run_last = 0;  // last start proven dense
        auto close_run = [&] {
            if (in_dense) {
                out.push_back({run_start, run_last + window});
                recorded.add(run_start, run_last);
            }
            in_dense = false;
        };

        while (l <= range.last) {
            if (options.recorded_blocks) {
                if (auto end = recorded.covering(l)) {
                    ++local.block_skips;
                    l = *end + 1;
                    continue;
                }
            }

            ++local.window_evals;
            if (unit_step) {
                counter.step_to(l);
            } else {
                counter.seek(l);
            }
            const std::int64_t cnt = counter.count();

            if (cnt < sigma) {
                close_run();
                if (!options.sparse_skip) {
                    ++l;
                    continue;
                }
                if (counter.hi() == occ.size()) break;  // no later window can gain an occurrence
                l = std::max(l + 1, occ[counter.hi()] - window);
                continue;
            }

            if (!options.stride_skip) {
                if (!in_dense) {
                    run_start = l;
                    in_dense = true;
                }
                run_last = l;
                ++l;
                continue;
            }

            const Timestamp keep = occ[counter.lo() + static_cast<std::size_t>(cnt - sigma)];
            if (!in_dense) {
                run_start = l;
                run_last = keep;
                in_dense = true;
            } else {
                run_last = std::max(run_last, keep);
            }
            if (keep + 1 > range.last) {
                run_last = std::min(run_last, range.last);
                break;
            }
            l = keep + 1;
        }
        close_run();
    }

    if (stats) *stats += local;
    return out;
}

}  // namespace densewin
