#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "densewin/types.hpp"

namespace densewin {

/// Admissible window starts [first, last] for one candidate region component.
struct StartRange {
    Timestamp first = 0;
    Timestamp last = 0;

    friend constexpr bool operator==(const StartRange&, const StartRange&) = default;
};

struct ScanOptions {
    /// Jump past the keep position of a dense window.
    bool stride_skip = true;
    /// Jump to the next start whose window can reach a new occurrence, and
    /// start each range at the first start that can hold sigma occurrences.
    bool sparse_skip = true;
    /// Skip starts inside window-start runs already registered by this call.
    bool recorded_blocks = true;

    static constexpr ScanOptions unit_step() { return {false, false, true}; }
};

struct ScanStats {
    std::uint64_t window_evals = 0;
    std::uint64_t block_skips = 0;

    ScanStats& operator+=(const ScanStats& o) {
        window_evals += o.window_evals;
        block_skips += o.block_skips;
        return *this;
    }
};

/// Maximal dense intervals of `occ` whose window-start runs lie in `ranges`.
/// Ranges must be sorted and pairwise disjoint. Each run of dense starts
/// [s, d] is emitted as [s, d + W]; runs are clipped to their range.
IntervalList scan(OccView occ, Timestamp window, std::int64_t sigma,
                  std::span<const StartRange> ranges, const ScanOptions& options = {},
                  ScanStats* stats = nullptr);

/// First of the last `sigma` occurrences in [l, l+W]. Requires the window to
/// hold at least `sigma` occurrences; every start in [l, keep] is dense.
Timestamp keep_position(OccView occ, Timestamp l, Timestamp window, std::int64_t sigma);

/// Next start worth evaluating after a sparse window at `l`:
/// max(l+1, t_next - W) for the first occurrence t_next > l + W.
/// Empty when no occurrence lies beyond the window.
std::optional<Timestamp> advance_on_sparse(OccView occ, Timestamp l, Timestamp window);

/// First start in a range beginning at `range_first` that can be dense, or
/// empty when fewer than `sigma` occurrences remain at or after it.
std::optional<Timestamp> initial_start(OccView occ, Timestamp range_first, Timestamp window,
                                       std::int64_t sigma);

/// The single range (0, max(0, t_max - W)).
StartRange unrestricted_range(Timestamp window, Timestamp t_max);

}  // namespace densewin
