#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "densewin/types.hpp"

namespace densewin {

/// Bijection between item tokens and dense ids, in first-appearance order.
class SymbolTable {
public:
    ItemId intern(std::string_view token);
    std::optional<ItemId> find(std::string_view token) const;
    const std::string& token(ItemId id) const { return tokens_.at(id); }
    std::size_t size() const noexcept { return tokens_.size(); }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, ItemId> ids_;
};

struct Transaction {
    Timestamp time = 0;
    std::vector<ItemId> items;  // sorted, unique, non-empty
};

/// Timestamped transaction database with strictly increasing timestamps.
class TransactionDB {
public:
    TransactionDB() = default;

    /// Builds from already-interned transactions. Item lists are sorted and
    /// deduplicated; empty transactions are dropped. Throws
    /// std::invalid_argument when timestamps are negative or not strictly
    /// increasing.
    TransactionDB(std::vector<Transaction> transactions, SymbolTable symbols);

    const std::vector<Transaction>& transactions() const noexcept { return transactions_; }
    const SymbolTable& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return transactions_.size(); }
    bool empty() const noexcept { return transactions_.empty(); }
    std::size_t item_count() const noexcept { return symbols_.size(); }

    /// Last timestamp; empty for an empty database.
    std::optional<Timestamp> t_max() const;

    /// Empty transactions removed while building.
    std::size_t dropped_empty() const noexcept { return dropped_empty_; }

private:
    std::vector<Transaction> transactions_;
    SymbolTable symbols_;
    std::size_t dropped_empty_ = 0;
};

struct LoadOptions {
    /// Union transactions sharing a timestamp instead of rejecting them.
    /// Also accepts lines out of timestamp order.
    bool merge_duplicates = false;
};

/// Reads the canonical text format: `#` comments, and data lines
/// `<timestamp>\t<item> <item> ...`. Throws ParseError with a line number.
TransactionDB load_db(std::istream& in, const LoadOptions& options = {});
TransactionDB load_db_file(const std::string& path, const LoadOptions& options = {});

/// Canonical serialization; a fixed point of load_db.
void save_db(const TransactionDB& db, std::ostream& out);
std::string to_canonical_text(const TransactionDB& db);

/// occ({x}) for every item, indexed by ItemId.
std::vector<OccList> build_item_index(const TransactionDB& db);

}  // namespace densewin
