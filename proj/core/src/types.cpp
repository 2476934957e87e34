#include "densewin/types.hpp"

#include <algorithm>

namespace densewin {

Pattern::Pattern(std::vector<ItemId> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Pattern Pattern::extended(ItemId item) const {
    if (!items_.empty() && item <= items_.back()) {
        throw std::invalid_argument("Pattern::extended: item must exceed the last item");
    }
    Pattern p;
    p.items_.reserve(items_.size() + 1);
    p.items_ = items_;
    p.items_.push_back(item);
    return p;
}

Pattern Pattern::without(std::size_t index) const {
    Pattern p;
    p.items_.reserve(items_.size() - 1);
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i != index) p.items_.push_back(items_[i]);
    }
    return p;
}

bool Pattern::is_subset_of(const Pattern& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                  b.items_.begin(), b.items_.end());
}

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::baseline: return "baseline";
        case Mode::intersect: return "intersect";
        case Mode::full: return "full";
    }
    return "full";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "baseline") return Mode::baseline;
    if (text == "intersect") return Mode::intersect;
    if (text == "full") return Mode::full;
    return std::nullopt;
}

void MiningParams::validate() const {
    if (window < 1) throw std::invalid_argument("window width W must be >= 1");
    if (sigma < 1) throw std::invalid_argument("minimum support sigma must be >= 1");
    if (k_max && *k_max < 1) throw std::invalid_argument("k_max must be >= 1");
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ParseError::ParseError(const std::string& what) : std::runtime_error(what) {}

}  // namespace densewin
