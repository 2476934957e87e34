#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "densewin/region.hpp"
#include "densewin/result_io.hpp"
#include "densewin/transaction_db.hpp"

namespace densewin::eval {

/// Pattern -> intervals. Interval lists may be empty for methods that output
/// patterns only.
struct PatternSet {
    std::map<TokenPattern, IntervalList> patterns;
    std::string label;

    static PatternSet from_entries(const std::vector<TokenEntry>& entries, std::string label = {});
    /// Drops patterns shorter than `min_len`.
    PatternSet filtered(std::size_t min_len) const;
    bool contains(const TokenPattern& p) const { return patterns.contains(p); }
    std::size_t size() const noexcept { return patterns.size(); }
};

using PredictionSet = PatternSet;
using TruthSet = PatternSet;

/// A score that may be undefined, plus any warnings raised computing it.
struct Metric {
    std::optional<double> value;
    std::vector<std::string> warnings;
};

inline constexpr std::size_t default_min_len = 2;

Metric f1(const PredictionSet& pred, const TruthSet& truth, std::size_t min_len = default_min_len);
Metric mean_jaccard(const PredictionSet& pred, const TruthSet& truth,
                    std::size_t min_len = default_min_len);
Metric mean_temporal_precision(const PredictionSet& pred, const TruthSet& truth,
                               std::size_t min_len = default_min_len);

struct MetricsReport {
    Metric f1;
    Metric mean_jaccard;
    Metric mean_tp;
    std::size_t predicted = 0;
    std::size_t truth = 0;
    std::size_t matched = 0;

    std::vector<std::string> warnings() const;
};

MetricsReport evaluate(const PredictionSet& pred, const TruthSet& truth,
                       std::size_t min_len = default_min_len);

struct SpanResult {
    PredictionSet prediction;
    std::vector<std::string> warnings;
};

/// One interval [first occurrence, last occurrence] per pattern.
SpanResult span_reference(const TransactionDB& db, const std::vector<TokenPattern>& patterns);

/// Duration-weighted overlap of `intervals` with the union of `promo`.
/// Undefined when the intervals have zero total duration.
std::optional<double> promo_overlap_ratio(const IntervalList& intervals, const Region& promo);

struct DayRecord {
    std::int64_t day = 0;
    std::int64_t rank = 0;   // rank within the day, 0-based
    std::int64_t n_day = 1;  // records on that day
};

inline constexpr std::int64_t day_slots = 1000;

/// day * 1000 + floor(rank * 1000 / n_day). Throws std::invalid_argument when
/// n_day > 1000 or rank is outside [0, n_day).
std::vector<Timestamp> expand_day_timestamps(const std::vector<DayRecord>& records);

struct PromoPeriods {
    Timestamp scale = day_slots;
    /// Inclusive day ranges.
    std::vector<std::pair<std::int64_t, std::int64_t>> days;

    /// Each inclusive day range [a, b] covers [a * scale, (b + 1) * scale].
    Region region() const;
};

/// {"scale": 1000, "periods": [[start_day, end_day], ...]}; a bare array of
/// pairs is accepted with the default scale. Throws SchemaError.
PromoPeriods read_promo_periods(std::istream& in);

/// {"f1":..,"mean_jaccard":..,"mean_tp":..,"counts":{...},"warnings":[...]}
/// with "undefined" for undefined scores. With promo periods, a per-pattern
/// "promo" table of R_promo over the predicted intervals is appended.
std::string metrics_json(const MetricsReport& report, const PredictionSet* pred = nullptr,
                         const PromoPeriods* promo = nullptr);

}  // namespace densewin::eval
