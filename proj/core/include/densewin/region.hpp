#pragma once

#include <initializer_list>
#include <span>

#include "densewin/types.hpp"

namespace densewin {

/// Point set on the time axis held as disjoint, non-abutting closed
/// components with strictly increasing starts (e_i < s_{i+1}).
///
/// Dense-interval lists may overlap or abut; converting one to a Region
/// coalesces it, e.g. {[0,15],[15,25]} becomes {[0,25]}.
class Region {
public:
    Region() = default;
    explicit Region(std::span<const Interval> intervals);
    Region(std::initializer_list<Interval> intervals);

    /// Unrestricted region covering [s, e].
    static Region span_of(Timestamp s, Timestamp e);

    const IntervalList& components() const noexcept { return components_; }
    bool empty() const noexcept { return components_.empty(); }
    bool contains(Timestamp t) const;
    bool contains(const Interval& iv) const;

    /// Sum of component durations, |[s,e]| = e - s.
    Timestamp measure() const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    IntervalList components_;
};

Region region_intersect(const Region& a, const Region& b);
/// Intersection of the point-set unions of every list. An empty span yields
/// the empty region.
Region region_intersect(std::span<const Region> regions);
Region region_union(const Region& a, const Region& b);

/// Duration of the union of `intervals`.
Timestamp region_union_measure(std::span<const Interval> intervals);

}  // namespace densewin
