#include "densewin/region.hpp"

#include <algorithm>

namespace densewin {

Region::Region(std::span<const Interval> intervals) {
    IntervalList sorted(intervals.begin(), intervals.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& iv : sorted) {
        if (iv.s > iv.e) throw std::invalid_argument("interval with start after end");
        if (!components_.empty() && iv.s <= components_.back().e) {
            components_.back().e = std::max(components_.back().e, iv.e);
        } else {
            components_.push_back(iv);
        }
    }
}

Region::Region(std::initializer_list<Interval> intervals)
    : Region(std::span<const Interval>(intervals.begin(), intervals.size())) {}

Region Region::span_of(Timestamp s, Timestamp e) { return Region{Interval{s, e}}; }

bool Region::contains(Timestamp t) const {
    auto it = std::upper_bound(components_.begin(), components_.end(), t,
                               [](Timestamp v, const Interval& iv) { return v < iv.s; });
    return it != components_.begin() && std::prev(it)->contains(t);
}

bool Region::contains(const Interval& iv) const {
    auto it = std::upper_bound(components_.begin(), components_.end(), iv.s,
                               [](Timestamp v, const Interval& c) { return v < c.s; });
    return it != components_.begin() && std::prev(it)->contains(iv.s) &&
           std::prev(it)->contains(iv.e);
}

Timestamp Region::measure() const {
    Timestamp total = 0;
    for (const auto& c : components_) total += c.length();
    return total;
}

Region region_intersect(const Region& a, const Region& b) {
    const auto& x = a.components();
    const auto& y = b.components();
    IntervalList out;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        Timestamp s = std::max(x[i].s, y[j].s);
        Timestamp e = std::min(x[i].e, y[j].e);
        if (s <= e) out.push_back({s, e});
        if (x[i].e < y[j].e) {
            ++i;
        } else {
            ++j;
        }
    }
    // Components of each input are separated by gaps, so the pieces are
    // already disjoint and non-abutting.
    return Region(out);
}

Region region_intersect(std::span<const Region> regions) {
    if (regions.empty()) return {};
    Region acc = regions.front();
    for (std::size_t i = 1; i < regions.size() && !acc.empty(); ++i) {
        acc = region_intersect(acc, regions[i]);
    }
    return acc;
}

Region region_union(const Region& a, const Region& b) {
    IntervalList all = a.components();
    all.insert(all.end(), b.components().begin(), b.components().end());
    return Region(all);
}

Timestamp region_union_measure(std::span<const Interval> intervals) {
    return Region(intervals).measure();
}

}  // namespace densewin
