#include "densewin/evalkit.hpp"

#include <algorithm>
#include <istream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "densewin/occ.hpp"

namespace densewin::eval {

namespace {

std::string pattern_label(const TokenPattern& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i];
    return s + "}";
}

double ratio(Timestamp num, Timestamp den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

PatternSet PatternSet::from_entries(const std::vector<TokenEntry>& entries, std::string label) {
    PatternSet set;
    set.label = std::move(label);
    for (const auto& e : entries) {
        TokenPattern key = e.items;
        std::sort(key.begin(), key.end());
        auto& slot = set.patterns[key];
        slot.insert(slot.end(), e.intervals.begin(), e.intervals.end());
        std::sort(slot.begin(), slot.end());
    }
    return set;
}

PatternSet PatternSet::filtered(std::size_t min_len) const {
    PatternSet out;
    out.label = label;
    for (const auto& [p, ivs] : patterns) {
        if (p.size() >= min_len) out.patterns.emplace(p, ivs);
    }
    return out;
}

Metric f1(const PredictionSet& pred_all, const TruthSet& truth_all, std::size_t min_len) {
    const auto pred = pred_all.filtered(min_len);
    const auto truth = truth_all.filtered(min_len);
    Metric m;
    if (pred.size() + truth.size() == 0) {
        m.value = 0.0;
        m.warnings.push_back("f1: both pattern sets are empty; reporting 0");
        return m;
    }
    std::size_t matched = 0;
    for (const auto& [p, _] : pred.patterns) matched += truth.contains(p);
    m.value = 2.0 * static_cast<double>(matched) / static_cast<double>(pred.size() + truth.size());
    return m;
}

Metric mean_jaccard(const PredictionSet& pred_all, const TruthSet& truth_all, std::size_t min_len) {
    const auto pred = pred_all.filtered(min_len);
    const auto truth = truth_all.filtered(min_len);
    Metric m;
    if (truth.size() == 0) {
        m.warnings.push_back("mean_jaccard: no ground-truth patterns; undefined");
        return m;
    }
    double sum = 0.0;
    for (const auto& [p, truth_ivs] : truth.patterns) {
        auto it = pred.patterns.find(p);
        if (it == pred.patterns.end()) continue;  // contributes 0
        const Region g(truth_ivs);
        const Region g_hat(it->second);
        const Timestamp uni = region_union(g, g_hat).measure();
        if (uni == 0) {
            m.warnings.push_back("mean_jaccard: zero-duration coverage for " + pattern_label(p) +
                                 "; contributes 0");
            continue;
        }
        sum += ratio(region_intersect(g, g_hat).measure(), uni);
    }
    m.value = sum / static_cast<double>(truth.size());
    return m;
}

Metric mean_temporal_precision(const PredictionSet& pred_all, const TruthSet& truth_all,
                               std::size_t min_len) {
    const auto pred = pred_all.filtered(min_len);
    const auto truth = truth_all.filtered(min_len);
    Metric m;
    std::size_t matched = 0;
    double sum = 0.0;
    for (const auto& [p, pred_ivs] : pred.patterns) {
        auto it = truth.patterns.find(p);
        if (it == truth.patterns.end()) continue;
        ++matched;
        const Region g_hat(pred_ivs);
        const Timestamp den = g_hat.measure();
        if (den == 0) {
            m.warnings.push_back("mean_tp: predicted coverage of " + pattern_label(p) +
                                 " has zero duration; contributes 0");
            continue;
        }
        sum += ratio(region_intersect(Region(it->second), g_hat).measure(), den);
    }
    if (matched == 0) {
        m.warnings.push_back("mean_tp: no correctly identified patterns; undefined");
        return m;
    }
    m.value = sum / static_cast<double>(matched);
    return m;
}

std::vector<std::string> MetricsReport::warnings() const {
    std::vector<std::string> all;
    for (const Metric* m : {&f1, &mean_jaccard, &mean_tp}) {
        all.insert(all.end(), m->warnings.begin(), m->warnings.end());
    }
    return all;
}

MetricsReport evaluate(const PredictionSet& pred, const TruthSet& truth, std::size_t min_len) {
    MetricsReport r;
    r.f1 = f1(pred, truth, min_len);
    r.mean_jaccard = mean_jaccard(pred, truth, min_len);
    r.mean_tp = mean_temporal_precision(pred, truth, min_len);
    const auto p = pred.filtered(min_len);
    const auto t = truth.filtered(min_len);
    r.predicted = p.size();
    r.truth = t.size();
    for (const auto& [pat, _] : p.patterns) r.matched += t.contains(pat);
    return r;
}

SpanResult span_reference(const TransactionDB& db, const std::vector<TokenPattern>& patterns) {
    SpanResult out;
    out.prediction.label = "span";
    const auto index = build_item_index(db);
    for (const auto& tokens : patterns) {
        std::optional<OccList> occ;
        bool unknown = false;
        for (const auto& tok : tokens) {
            auto id = db.symbols().find(tok);
            if (!id) {
                unknown = true;
                break;
            }
            occ = occ ? occ_intersect(*occ, index[*id]) : index[*id];
        }
        if (unknown || !occ || occ->empty()) {
            out.warnings.push_back("span: " + pattern_label(tokens) + " never occurs; skipped");
            continue;
        }
        TokenPattern key = tokens;
        std::sort(key.begin(), key.end());
        out.prediction.patterns[key] = {{occ->front(), occ->back()}};
    }
    return out;
}

std::optional<double> promo_overlap_ratio(const IntervalList& intervals, const Region& promo) {
    Timestamp total = 0;
    Timestamp overlap = 0;
    for (const auto& iv : intervals) {
        total += iv.length();
        overlap += region_intersect(Region{iv}, promo).measure();
    }
    if (total == 0) return std::nullopt;
    return ratio(overlap, total);
}

std::vector<Timestamp> expand_day_timestamps(const std::vector<DayRecord>& records) {
    std::vector<Timestamp> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        if (r.n_day < 1 || r.n_day > day_slots) {
            throw std::invalid_argument("n_day must be in [1, 1000], got " + std::to_string(r.n_day));
        }
        if (r.rank < 0 || r.rank >= r.n_day) {
            throw std::invalid_argument("rank " + std::to_string(r.rank) + " outside [0, n_day)");
        }
        if (r.day < 0) throw std::invalid_argument("negative day");
        out.push_back(r.day * day_slots + r.rank * day_slots / r.n_day);
    }
    return out;
}

Region PromoPeriods::region() const {
    IntervalList ivs;
    for (auto [a, b] : days) ivs.push_back({a * scale, (b + 1) * scale});
    return Region(ivs);
}

PromoPeriods read_promo_periods(std::istream& in) {
    using json = nlohmann::json;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid promo JSON: ") + e.what());
    }
    PromoPeriods promo;
    const json* periods = &doc;
    if (doc.is_object()) {
        if (doc.contains("scale")) {
            if (!doc["scale"].is_number_integer() || doc["scale"].get<std::int64_t>() < 1) {
                throw SchemaError("promo \"scale\" must be a positive integer");
            }
            promo.scale = doc["scale"].get<Timestamp>();
        }
        if (!doc.contains("periods")) throw SchemaError("promo file needs \"periods\"");
        periods = &doc["periods"];
    }
    if (!periods->is_array()) throw SchemaError("promo periods must be an array");
    for (const auto& p : *periods) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw SchemaError("promo period must be [start_day, end_day]");
        }
        auto a = p[0].get<std::int64_t>();
        auto b = p[1].get<std::int64_t>();
        if (a < 0 || a > b) throw SchemaError("promo period needs 0 <= start_day <= end_day");
        promo.days.emplace_back(a, b);
    }
    return promo;
}

std::string metrics_json(const MetricsReport& report, const PredictionSet* pred,
                         const PromoPeriods* promo) {
    using json = nlohmann::ordered_json;
    auto score = [](const Metric& m) -> json {
        if (m.value) return *m.value;
        return "undefined";
    };
    json doc = {
        {"f1", score(report.f1)},
        {"mean_jaccard", score(report.mean_jaccard)},
        {"mean_tp", score(report.mean_tp)},
        {"counts", {{"predicted", report.predicted}, {"truth", report.truth}, {"matched", report.matched}}},
        {"warnings", report.warnings()},
    };
    if (pred && promo) {
        const Region region = promo->region();
        json table = json::array();
        for (const auto& [p, ivs] : pred->patterns) {
            auto r = promo_overlap_ratio(ivs, region);
            json row = {{"items", p}};
            row["r_promo"] = r ? json(*r) : json("undefined");
            table.push_back(std::move(row));
        }
        doc["promo"] = std::move(table);
    }
    return doc.dump(2) + "\n";
}

}  // namespace densewin::eval
