#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace densewin {

/// Abstract, non-negative time unit. Stored signed so that window arithmetic
/// such as `t - W` can be clipped at zero without wrap-around.
using Timestamp = std::int64_t;

/// Dense item identifier assigned in order of first appearance.
using ItemId = std::uint32_t;

/// Sorted occurrence timestamps of one itemset.
using OccList = std::vector<Timestamp>;
using OccView = std::span<const Timestamp>;

/// Closed integer interval [s, e].
struct Interval {
    Timestamp s = 0;
    Timestamp e = 0;

    constexpr Timestamp length() const noexcept { return e - s; }
    constexpr bool contains(Timestamp t) const noexcept { return s <= t && t <= e; }

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

using IntervalList = std::vector<Interval>;

/// Canonically sorted itemset.
class Pattern {
public:
    Pattern() = default;
    /// Sorts and deduplicates `items`.
    explicit Pattern(std::vector<ItemId> items);
    Pattern(std::initializer_list<ItemId> items) : Pattern(std::vector<ItemId>(items)) {}

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    std::span<const ItemId> items() const noexcept { return items_; }
    ItemId operator[](std::size_t i) const { return items_[i]; }
    ItemId back() const { return items_.back(); }

    /// Pattern with one more item appended; `item` must exceed back().
    Pattern extended(ItemId item) const;
    /// Pattern with the item at `index` removed.
    Pattern without(std::size_t index) const;
    bool is_subset_of(const Pattern& other) const;

    /// Orders by length first, then lexicographically by item id.
    friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);
    friend bool operator==(const Pattern& a, const Pattern& b) = default;

private:
    std::vector<ItemId> items_;
};

enum class Mode { baseline, intersect, full };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct MiningParams {
    Timestamp window = 0;
    std::int64_t sigma = 0;
    std::optional<std::size_t> k_max;
    Mode mode = Mode::full;

    /// Throws std::invalid_argument when W, sigma or k_max are out of range.
    void validate() const;
};

/// Input text could not be parsed. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    explicit ParseError(const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

}  // namespace densewin
