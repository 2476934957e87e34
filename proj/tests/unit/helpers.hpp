#pragma once

#include <sstream>
#include <string>

#include "densewin/densewin.hpp"

namespace densewin::testing {

inline TransactionDB db_from_text(const std::string& text, const LoadOptions& options = {}) {
    std::istringstream in(text);
    return load_db(in, options);
}

// The running example used throughout the docs.
inline TransactionDB running_example() {
    return db_from_text(
        "1\ta b\n3\ta b c\n5\tb c\n7\ta b c\n9\ta b\n20\ta b c\n22\tb c\n25\ta b c\n");
}

inline Pattern pattern_of(const TransactionDB& db, std::initializer_list<const char*> tokens) {
    std::vector<ItemId> ids;
    for (const char* t : tokens) ids.push_back(*db.symbols().find(t));
    return Pattern(std::move(ids));
}

}  // namespace densewin::testing
