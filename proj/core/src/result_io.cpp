#include "densewin/result_io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace densewin {

using json = nlohmann::ordered_json;

TokenPattern to_tokens(const Pattern& p, const SymbolTable& symbols) {
    TokenPattern tokens;
    tokens.reserve(p.size());
    for (ItemId id : p.items()) tokens.push_back(symbols.token(id));
    std::sort(tokens.begin(), tokens.end());
    return tokens;
}

void canonicalize(std::vector<TokenEntry>& entries) {
    for (auto& e : entries) {
        std::sort(e.items.begin(), e.items.end());
        std::sort(e.intervals.begin(), e.intervals.end());
    }
    std::sort(entries.begin(), entries.end(), [](const TokenEntry& a, const TokenEntry& b) {
        if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
        return a.items < b.items;
    });
}

void write_pattern_file(std::ostream& out, const std::string& params_json,
                        std::optional<Timestamp> t_max, std::vector<TokenEntry> entries,
                        const std::string& extra_json) {
    canonicalize(entries);
    out << "{\"params\":" << json::parse(params_json).dump() << ",\"t_max\":";
    if (t_max) {
        out << *t_max;
    } else {
        out << "null";
    }
    out << ",\"patterns\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        json intervals = json::array();
        for (const auto& iv : entries[i].intervals) intervals.push_back({iv.s, iv.e});
        json entry = {{"items", entries[i].items}, {"intervals", std::move(intervals)}};
        out << (i ? ",\n" : "\n") << entry.dump();
    }
    out << (entries.empty() ? "]" : "\n]");
    const json extra = json::parse(extra_json);
    for (const auto& [key, value] : extra.items()) {
        out << "," << json(key).dump() << ":" << value.dump();
    }
    out << "}\n";
}

void write_result_json(const MiningResult& result, const SymbolTable& symbols, std::ostream& out,
                       std::size_t min_len) {
    json params = {{"W", result.params.window}, {"sigma", result.params.sigma}, {"k_max", nullptr}};
    if (result.params.k_max) params["k_max"] = *result.params.k_max;

    std::vector<TokenEntry> entries;
    entries.reserve(result.entries.size());
    for (const auto& e : result.entries) {
        if (e.pattern.size() < min_len) continue;
        entries.push_back({to_tokens(e.pattern, symbols), e.intervals});
    }
    write_pattern_file(out, params.dump(), result.t_max, std::move(entries));
}

std::string result_json(const MiningResult& result, const SymbolTable& symbols,
                        std::size_t min_len) {
    std::ostringstream out;
    write_result_json(result, symbols, out, min_len);
    return out.str();
}

namespace {

Timestamp as_timestamp(const json& v, const char* what) {
    if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    auto t = v.get<std::int64_t>();
    if (t < 0) throw SchemaError(std::string(what) + " must be non-negative");
    return t;
}

}  // namespace

PatternFile read_pattern_file(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level must be an object");
    if (!doc.contains("patterns") || !doc["patterns"].is_array()) {
        throw SchemaError("missing \"patterns\" array");
    }

    PatternFile file;
    if (doc.contains("t_max") && !doc["t_max"].is_null()) file.t_max = as_timestamp(doc["t_max"], "t_max");
    for (const auto& p : doc["patterns"]) {
        if (!p.is_object() || !p.contains("items") || !p["items"].is_array()) {
            throw SchemaError("pattern entry needs an \"items\" array");
        }
        TokenEntry entry;
        for (const auto& item : p["items"]) {
            if (!item.is_string()) throw SchemaError("item tokens must be strings");
            entry.items.push_back(item.get<std::string>());
        }
        if (entry.items.empty()) throw SchemaError("pattern with no items");
        if (p.contains("intervals")) {
            if (!p["intervals"].is_array()) throw SchemaError("\"intervals\" must be an array");
            for (const auto& iv : p["intervals"]) {
                if (!iv.is_array() || iv.size() != 2) throw SchemaError("interval must be [s,e]");
                Interval x{as_timestamp(iv[0], "interval start"), as_timestamp(iv[1], "interval end")};
                if (x.s > x.e) throw SchemaError("interval start after end");
                entry.intervals.push_back(x);
            }
        }
        file.entries.push_back(std::move(entry));
    }
    canonicalize(file.entries);
    return file;
}

PatternFile read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    return read_pattern_file(in);
}

}  // namespace densewin
