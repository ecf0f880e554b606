// SPDX-License-Identifier: Apache-2.0
//
// A four-row table and query pairs whose comparison outcome follows from its
// contents by hand.
#pragma once

#include <filesystem>

#include "middleware/db/sqlite.hpp"

namespace mw::testing {

inline void create_golden_table(const std::filesystem::path& path) {
    db::Connection rw(path, db::Connection::Mode::kReadWriteCreate);
    rw.exec("CREATE TABLE t (id INTEGER PRIMARY KEY, name TEXT, score REAL, dept TEXT);"
            "INSERT INTO t VALUES (1, 'a', 1.0, 'x'), (2, 'b', 2.5, 'x'), (3, 'c', NULL, 'y'), (4, 'a', 1.0, NULL);");
}

struct GoldenPair {
    const char* predicted;
    const char* gold;
    bool multiset;
    bool set;
};

inline constexpr GoldenPair kGoldenPairs[] = {
    {"SELECT name FROM t ORDER BY id", "SELECT name FROM t ORDER BY id DESC", true, true},
    {"SELECT name FROM t", "SELECT DISTINCT name FROM t", false, true},
    {"SELECT COUNT(*) FROM t", "SELECT COUNT(score) FROM t", false, false},
    {"SELECT COUNT(*) FROM t", "SELECT COUNT(id) FROM t;", true, true},
    {"SELECT 1.0", "SELECT 1", true, true},
    {"SELECT '1'", "SELECT 1", false, false},
    {"SELECT NULL", "SELECT NULL", true, true},
    {"SELECT NULL", "SELECT 0", false, false},
    {"SELECT NULL", "SELECT ''", false, false},
    {"SELECT name, id FROM t", "SELECT id, name FROM t", false, false},
    {"SELECT nope FROM t", "SELECT id FROM t", false, false},
    {"SELECT id FROM t WHERE id > 10", "SELECT name FROM t WHERE id < 0", true, true},
    {"SELECT score FROM t WHERE id = 2", "SELECT 2.5", true, true},
    {"SELECT dept FROM t WHERE dept IS NULL", "SELECT NULL", true, true},
    {"SELECT AVG(score) FROM t", "SELECT SUM(score) / COUNT(score) FROM t", true, true},
    {"DELETE FROM t", "SELECT id FROM t", false, false},
    {"SELECT 1; SELECT 2", "SELECT 1", false, false},
    {"SELECT name FROM t WHERE dept = 'x' UNION ALL SELECT 'a'", "SELECT name FROM t WHERE name IN ('a', 'b')",
     true, true},
};

}  // namespace mw::testing
