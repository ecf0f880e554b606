// SPDX-License-Identifier: Apache-2.0
//
// Result comparison done entirely by the SQL engine: both queries are
// grouped into (row, multiplicity) relations and compared with EXCEPT.
#pragma once

#include <string>

#include "middleware/db/sqlite.hpp"
#include "middleware/text.hpp"

namespace mw::testing {

inline std::string strip_statement(std::string sql) {
    while (!sql.empty() && (sql.back() == ';' || std::isspace(static_cast<unsigned char>(sql.back())))) sql.pop_back();
    return sql;
}

inline int column_count(const db::Connection& conn, const std::string& sql) {
    return conn.prepare(sql).column_count();
}

inline long long row_count(const db::Connection& conn, const std::string& sql) {
    auto stmt = conn.prepare("SELECT COUNT(*) FROM (" + sql + ")");
    stmt.step();
    return stmt.column(0).integer;
}

/// Runs both queries and reports whether they return the same rows, ignoring
/// order. `multiset` keeps duplicate counts. A failing predicted query gives
/// false; a failing gold query throws.
inline bool engine_same_rows(const db::Connection& conn, const std::string& predicted, const std::string& gold,
                             bool multiset) {
    const auto g = strip_statement(gold);
    const int gn = column_count(conn, g);
    const auto p = strip_statement(predicted);
    int pn = 0;
    try {
        pn = column_count(conn, p);
        row_count(conn, p);
    } catch (const db::SqliteError&) {
        return false;
    }
    if (pn != gn) return row_count(conn, p) == 0 && row_count(conn, g) == 0;

    std::string cols;
    for (int i = 1; i <= gn; ++i) cols += (i > 1 ? ", c" : "c") + std::to_string(i);
    const std::string shape = multiset ? "SELECT " + cols + ", COUNT(*) AS k FROM %s GROUP BY " + cols
                                       : "SELECT DISTINCT " + cols + " FROM %s";
    auto grouped = [&](const std::string& rel) {
        std::string out = shape;
        out.replace(out.find("%s"), 2, rel);
        return out;
    };
    const std::string sql = "WITH p(" + cols + ") AS (" + p + "), g(" + cols + ") AS (" + g + "), pc AS (" +
                            grouped("p") + "), gc AS (" + grouped("g") +
                            ") SELECT (SELECT COUNT(*) FROM (SELECT * FROM pc EXCEPT SELECT * FROM gc)) + "
                            "(SELECT COUNT(*) FROM (SELECT * FROM gc EXCEPT SELECT * FROM pc))";
    auto stmt = conn.prepare(sql);
    stmt.step();
    return stmt.column(0).integer == 0;
}

}  // namespace mw::testing
