#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "densewin/miner.hpp"
#include "densewin/transaction_db.hpp"

namespace densewin {

/// Itemset named by its tokens, sorted lexicographically.
using TokenPattern = std::vector<std::string>;

TokenPattern to_tokens(const Pattern& p, const SymbolTable& symbols);

struct TokenEntry {
    TokenPattern items;
    IntervalList intervals;

    friend bool operator==(const TokenEntry&, const TokenEntry&) = default;
};

/// Sorts by (length, lexicographic tokens); intervals by start.
void canonicalize(std::vector<TokenEntry>& entries);

/// Canonical result file:
/// {"params":{"W":..,"sigma":..,"k_max":..},"t_max":..,"patterns":[...]}
/// Patterns shorter than `min_len` are omitted.
void write_result_json(const MiningResult& result, const SymbolTable& symbols, std::ostream& out,
                       std::size_t min_len = 1);
std::string result_json(const MiningResult& result, const SymbolTable& symbols,
                        std::size_t min_len = 1);

/// Writes any pattern list with the same layout. `params_json` and
/// `extra_json` are serialized JSON objects; extra keys are appended after
/// "patterns".
void write_pattern_file(std::ostream& out, const std::string& params_json,
                        std::optional<Timestamp> t_max, std::vector<TokenEntry> entries,
                        const std::string& extra_json = "{}");

/// Thrown when a JSON file does not match the expected layout.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PatternFile {
    std::optional<Timestamp> t_max;
    std::vector<TokenEntry> entries;
};

/// Reads the "patterns" array of a result or ground-truth file.
PatternFile read_pattern_file(std::istream& in);
PatternFile read_pattern_file(const std::string& path);

}  // namespace densewin
