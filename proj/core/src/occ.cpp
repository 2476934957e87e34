#include "densewin/occ.hpp"

#include <algorithm>

namespace densewin {

namespace {

// Below this size ratio a linear merge beats galloping.
constexpr std::size_t gallop_ratio = 32;

OccList gallop_intersect(OccView small, OccView large) {
    OccList out;
    out.reserve(small.size());
    auto lo = large.begin();
    for (Timestamp t : small) {
        std::size_t step = 1;
        auto hi = lo;
        while (hi != large.end() && *hi < t) {
            lo = hi;
            auto remaining = static_cast<std::size_t>(large.end() - hi);
            hi += static_cast<std::ptrdiff_t>(std::min(step, remaining));
            step *= 2;
        }
        lo = std::lower_bound(lo, hi == large.end() ? hi : hi + 1, t);
        if (lo == large.end()) break;
        if (*lo == t) out.push_back(t);
    }
    return out;
}

}  // namespace

OccList occ_intersect(OccView a, OccView b) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.empty()) return {};
    if (a.size() * gallop_ratio < b.size()) return gallop_intersect(a, b);

    OccList out;
    out.reserve(a.size());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t lower_index(OccView occ, Timestamp t) {
    return static_cast<std::size_t>(std::lower_bound(occ.begin(), occ.end(), t) - occ.begin());
}

std::size_t upper_index(OccView occ, Timestamp t) {
    return static_cast<std::size_t>(std::upper_bound(occ.begin(), occ.end(), t) - occ.begin());
}

std::int64_t interval_support(OccView occ, Timestamp l, Timestamp window) {
    return static_cast<std::int64_t>(upper_index(occ, l + window) - lower_index(occ, l));
}

}  // namespace densewin
