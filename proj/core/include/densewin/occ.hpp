#pragma once

#include <cstdint>

#include "densewin/types.hpp"

namespace densewin {

/// Sorted intersection of two occurrence lists. Switches to galloping search
/// when one side is much shorter than the other.
OccList occ_intersect(OccView a, OccView b);

/// Number of occurrences t with l <= t <= l + W.
std::int64_t interval_support(OccView occ, Timestamp l, Timestamp window);

/// Index of the first occurrence >= t.
std::size_t lower_index(OccView occ, Timestamp t);
/// Index of the first occurrence > t.
std::size_t upper_index(OccView occ, Timestamp t);

}  // namespace densewin
