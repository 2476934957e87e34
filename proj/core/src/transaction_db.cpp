#include "densewin/transaction_db.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace densewin {

ItemId SymbolTable::intern(std::string_view token) {
    std::string key(token);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    auto id = static_cast<ItemId>(tokens_.size());
    tokens_.push_back(key);
    ids_.emplace(std::move(key), id);
    return id;
}

std::optional<ItemId> SymbolTable::find(std::string_view token) const {
    if (auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
    return std::nullopt;
}

TransactionDB::TransactionDB(std::vector<Transaction> transactions, SymbolTable symbols)
    : symbols_(std::move(symbols)) {
    transactions_.reserve(transactions.size());
    for (auto& tx : transactions) {
        if (tx.time < 0) throw std::invalid_argument("negative timestamp");
        if (!transactions_.empty() && tx.time <= transactions_.back().time) {
            throw std::invalid_argument("timestamps must be strictly increasing");
        }
        std::sort(tx.items.begin(), tx.items.end());
        tx.items.erase(std::unique(tx.items.begin(), tx.items.end()), tx.items.end());
        if (tx.items.empty()) {
            ++dropped_empty_;
            continue;
        }
        for (ItemId id : tx.items) {
            if (id >= symbols_.size()) throw std::invalid_argument("item id outside symbol table");
        }
        transactions_.push_back(std::move(tx));
    }
}

std::optional<Timestamp> TransactionDB::t_max() const {
    if (transactions_.empty()) return std::nullopt;
    return transactions_.back().time;
}

namespace {

constexpr std::string_view whitespace = " \t\r\v\f";

Timestamp parse_timestamp(std::string_view text, std::size_t line) {
    if (text.empty()) throw ParseError(line, "missing timestamp");
    if (text.front() == '-') throw ParseError(line, "negative timestamp '" + std::string(text) + "'");
    Timestamp value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, "timestamp out of range '" + std::string(text) + "'");
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(line, "timestamp is not a non-negative integer '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

TransactionDB load_db(std::istream& in, const LoadOptions& options) {
    SymbolTable symbols;
    // Ordered by timestamp; used for merging.
    std::map<Timestamp, std::vector<ItemId>> merged;
    std::vector<Transaction> ordered;

    std::string raw;
    std::size_t line_no = 0;
    std::optional<Timestamp> last;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto first = line.find_first_not_of(whitespace);
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;
        if (first != 0) throw ParseError(line_no, "malformed line: leading whitespace");

        auto ts_end = line.find_first_of(whitespace);
        Timestamp ts = parse_timestamp(line.substr(0, ts_end), line_no);

        std::vector<ItemId> items;
        if (ts_end != std::string_view::npos) {
            std::string_view rest = line.substr(ts_end);
            std::size_t pos = 0;
            while (true) {
                pos = rest.find_first_not_of(whitespace, pos);
                if (pos == std::string_view::npos) break;
                auto end = rest.find_first_of(whitespace, pos);
                items.push_back(symbols.intern(rest.substr(pos, end - pos)));
                if (end == std::string_view::npos) break;
                pos = end;
            }
        }

        if (options.merge_duplicates) {
            auto& slot = merged[ts];
            slot.insert(slot.end(), items.begin(), items.end());
            continue;
        }
        if (last && ts == *last) {
            throw ParseError(line_no, "duplicate timestamp " + std::to_string(ts) +
                                          " (enable merging of duplicate timestamps to union them)");
        }
        if (last && ts < *last) {
            throw ParseError(line_no, "timestamps not strictly increasing (" + std::to_string(ts) +
                                          " after " + std::to_string(*last) + ")");
        }
        last = ts;
        ordered.push_back({ts, std::move(items)});
    }
    if (in.bad()) throw std::ios_base::failure("read error");

    if (options.merge_duplicates) {
        ordered.reserve(merged.size());
        for (auto& [ts, items] : merged) ordered.push_back({ts, std::move(items)});
    }
    return TransactionDB(std::move(ordered), std::move(symbols));
}

TransactionDB load_db_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    return load_db(in, options);
}

void save_db(const TransactionDB& db, std::ostream& out) {
    const auto& symbols = db.symbols();
    for (const auto& tx : db.transactions()) {
        out << tx.time << '\t';
        for (std::size_t i = 0; i < tx.items.size(); ++i) {
            if (i) out << ' ';
            out << symbols.token(tx.items[i]);
        }
        out << '\n';
    }
}

std::string to_canonical_text(const TransactionDB& db) {
    std::ostringstream out;
    save_db(db, out);
    return out.str();
}

std::vector<OccList> build_item_index(const TransactionDB& db) {
    std::vector<std::size_t> counts(db.item_count(), 0);
    for (const auto& tx : db.transactions()) {
        for (ItemId id : tx.items) ++counts[id];
    }
    std::vector<OccList> index(db.item_count());
    for (std::size_t i = 0; i < index.size(); ++i) index[i].reserve(counts[i]);
    for (const auto& tx : db.transactions()) {
        for (ItemId id : tx.items) index[id].push_back(tx.time);
    }
    return index;
}

}  // namespace densewin
